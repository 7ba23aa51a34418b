// App shell: tab bar, help dialog, and per-tab initialization.

import { api } from "./api";
import { initAdminTab } from "./tabs/admin";
import { initExportTab } from "./tabs/exportTab";
import { initGeographyTab } from "./tabs/geography";
import { initTimeSeriesTab } from "./tabs/timeSeries";
import { initTreeTab } from "./tabs/tree";

const TABS = [
  "Time Series",
  "Geography",
  "Tree Explorer",
  "Export Data",
  "Admin",
] as const;

type TabName = (typeof TABS)[number];

const HELP_TEXT = `Time Series: two stacked charts with their own series
pickers and one shared year slider; the strip on top shows the latest
unemployment rate and nonfarm payrolls with month-over-month change.

Geography: a state map of one dataset at one month. Pick the dataset and
check seasonal adjustment / percent change, then press Change Database.
Hover for values, click a state to zoom, click again to zoom out.

Tree Explorer: the catalog as a collapsible tree (click a box to expand;
click the last expanded box again to collapse). Drag leaves into the plot
boxes to chart up to six series each; click a plotted item to remove it.

Export Data: pick series, a format, and an optional year window, then
download or preview.

Admin: store freshness, the ingest audit log, and a manual ingest trigger.`;

function boot(): void {
  const app = document.getElementById("app")!;
  app.innerHTML = "";

  const bar = document.createElement("nav");
  bar.className = "tab-bar";
  const panels = new Map<TabName, HTMLElement>();
  const buttons = new Map<TabName, HTMLButtonElement>();
  const initialized = new Set<TabName>();

  for (const name of TABS) {
    const button = document.createElement("button");
    button.textContent = name;
    button.addEventListener("click", () => activate(name));
    bar.appendChild(button);
    buttons.set(name, button);
  }

  const help = document.createElement("button");
  help.textContent = "Help";
  help.className = "help-button";
  bar.appendChild(help);
  app.appendChild(bar);

  const dialog = document.createElement("dialog");
  dialog.className = "help-dialog";
  const helpBody = document.createElement("pre");
  helpBody.textContent = HELP_TEXT;
  const close = document.createElement("button");
  close.textContent = "Close";
  close.addEventListener("click", () => dialog.close());
  dialog.appendChild(helpBody);
  dialog.appendChild(close);
  app.appendChild(dialog);
  help.addEventListener("click", () => dialog.showModal());

  for (const name of TABS) {
    const panel = document.createElement("main");
    panel.className = "tab-panel";
    panel.hidden = true;
    app.appendChild(panel);
    panels.set(name, panel);
  }

  const catalogPromise = api.catalog().then((body) => body.catalog);
  const treePromise = api.tree();
  let admin: { refresh(): void } | null = null;

  async function activate(name: TabName): Promise<void> {
    for (const [tab, panel] of panels) {
      panel.hidden = tab !== name;
      buttons.get(tab)!.classList.toggle("active", tab === name);
    }
    const panel = panels.get(name)!;
    if (initialized.has(name)) {
      if (name === "Admin") admin?.refresh();
      return;
    }
    initialized.add(name);
    try {
      const catalog = await catalogPromise;
      if (name === "Time Series") initTimeSeriesTab(panel, catalog);
      else if (name === "Geography") initGeographyTab(panel, catalog);
      else if (name === "Tree Explorer") initTreeTab(panel, catalog, await treePromise);
      else if (name === "Export Data") initExportTab(panel, catalog);
      else admin = initAdminTab(panel);
    } catch (error) {
      panel.textContent = `failed to load: ${(error as Error).message}`;
      initialized.delete(name);
    }
  }

  void activate("Time Series");
}

boot();
