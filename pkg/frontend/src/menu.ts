// The fixed navigation menu, present on every page. Hovering an entity
// entry reveals its Add / List all submenu (pure CSS).

import { el } from "./dom.js";

export interface MenuEntry {
  label: string;
  route?: string;
  children?: { label: string; route: string }[];
}

export const MENU: MenuEntry[] = [
  { label: "Home", route: "#/" },
  {
    label: "Area",
    children: [
      { label: "Add", route: "#/area/add" },
      { label: "List all", route: "#/area/list" },
    ],
  },
  {
    label: "Publication",
    children: [
      { label: "Add", route: "#/publication/add" },
      { label: "List all", route: "#/publication/list" },
    ],
  },
  {
    label: "Observation",
    children: [
      { label: "Add", route: "#/observation/add" },
      { label: "List all", route: "#/observation/list" },
    ],
  },
  {
    label: "Indicator",
    children: [
      { label: "Add", route: "#/indicator/add" },
      { label: "List all", route: "#/indicator/list" },
    ],
  },
  { label: "Map", route: "#/map" },
  { label: "Graphs", route: "#/graphs" },
];

export function renderMenu(container: HTMLElement): void {
  container.textContent = "";
  const list = el("ul", { class: "menu" });
  for (const entry of MENU) {
    const item = el("li", { class: "menu-item" });
    if (entry.route) {
      item.appendChild(el("a", { href: entry.route }, [entry.label]));
    } else {
      item.appendChild(el("span", { class: "menu-label" }, [entry.label]));
    }
    if (entry.children) {
      const sub = el("ul", { class: "submenu" });
      for (const child of entry.children) {
        sub.appendChild(el("li", {}, [el("a", { href: child.route }, [child.label])]));
      }
      item.appendChild(sub);
    }
    list.appendChild(item);
  }
  container.appendChild(list);
}
