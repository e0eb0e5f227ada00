// Hash router. The menu stays fixed; the matched page renders into #app.

import { Client } from "./api.js";
import { renderMenu } from "./menu.js";
import {
  renderAreaAdd,
  renderAreaList,
  renderGraphsPage,
  renderHome,
  renderIndicatorAdd,
  renderIndicatorList,
  renderMapPage,
  renderObservationAdd,
  renderObservationList,
  renderPublicationAdd,
  renderPublicationList,
  renderVlmAdd,
  renderVlmList,
} from "./pages.js";

const client = new Client();

function route(): void {
  const app = document.querySelector<HTMLElement>("#app");
  if (!app) {
    return;
  }
  const hash = window.location.hash || "#/";
  const mapMatch = hash.match(/^#\/map\/publication\/(\d+)$/);
  if (mapMatch) {
    renderMapPage(app, client, { publicationId: Number(mapMatch[1]) });
    return;
  }
  const filteredList = hash.match(/^#\/observation\/list\/(area|publication)\/(\d+)$/);
  if (filteredList) {
    renderObservationList(app, client, {
      kind: filteredList[1] as "area" | "publication",
      id: Number(filteredList[2]),
    });
    return;
  }
  switch (hash) {
    case "#/":
      renderHome(app);
      break;
    case "#/area/add":
      renderAreaAdd(app, client);
      break;
    case "#/area/list":
      renderAreaList(app, client);
      break;
    case "#/publication/add":
      renderPublicationAdd(app, client);
      break;
    case "#/publication/list":
      renderPublicationList(app, client);
      break;
    case "#/observation/add":
      renderObservationAdd(app, client);
      break;
    case "#/observation/list":
      renderObservationList(app, client);
      break;
    case "#/indicator/add":
      renderIndicatorAdd(app, client);
      break;
    case "#/indicator/list":
      renderIndicatorList(app, client);
      break;
    case "#/vlm/add":
      renderVlmAdd(app, client);
      break;
    case "#/vlm/list":
      renderVlmList(app, client);
      break;
    case "#/map":
      renderMapPage(app, client);
      break;
    case "#/graphs":
      renderGraphsPage(app, client);
      break;
    default:
      renderHome(app);
  }
}

const nav = document.querySelector<HTMLElement>("#menu");
if (nav) {
  renderMenu(nav);
}
window.addEventListener("hashchange", route);
route();
