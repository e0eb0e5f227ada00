"""Command line entry point.

    sealevel --port 8080 --data ./sealevel-data.json --static-dir ./ui

Each flag can also come from the environment with the ``SEALEVEL_``
prefix (SEALEVEL_PORT, SEALEVEL_DATA, SEALEVEL_STATIC_DIR,
SEALEVEL_HOST); an explicit flag wins over the environment.
"""

import argparse
import os

import uvicorn

from .api import create_app
from .store import Store

ENV_PREFIX = "SEALEVEL_"
DEFAULT_DATA_FILE = "sealevel-data.json"


def build_parser() -> argparse.ArgumentParser:
    env = os.environ
    parser = argparse.ArgumentParser(
        prog="sealevel",
        description="Serve the sea-level observation compilation API and web UI.",
    )
    parser.add_argument(
        "--port",
        type=int,
        default=int(env.get(ENV_PREFIX + "PORT", "8080")),
        help="TCP port to listen on (default 8080)",
    )
    parser.add_argument(
        "--host",
        default=env.get(ENV_PREFIX + "HOST", "127.0.0.1"),
        help="interface to bind (default 127.0.0.1)",
    )
    parser.add_argument(
        "--data",
        default=env.get(ENV_PREFIX + "DATA", DEFAULT_DATA_FILE),
        help=f"persistence file path (default ./{DEFAULT_DATA_FILE})",
    )
    parser.add_argument(
        "--static-dir",
        default=env.get(ENV_PREFIX + "STATIC_DIR"),
        help="directory of web UI assets to serve at / (optional)",
    )
    return parser


def main(argv=None) -> None:
    args = build_parser().parse_args(argv)
    store = Store(args.data)
    app = create_app(store, static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    main()
