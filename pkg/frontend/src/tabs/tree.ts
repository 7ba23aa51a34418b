// Tree Explorer tab: collapsible catalog tree with tidy layout, a search
// box over leaf titles, and drag-and-drop plotting into three plot areas.

import { api, CatalogEntry, LatestWins, SeriesBody } from "../api";
import { ChartSeries, renderLineChart } from "../charts";
import { TREE_CLASS_COLORS } from "../palette";
import {
  addToPlot,
  clearPlot,
  emptyPlot,
  PlotArea,
  removeFromPlot,
} from "../plotArea";
import { layoutTree, TreeNode, walkTree } from "../treeLayout";

const SVG_NS = "http://www.w3.org/2000/svg";
const SLOT_W = 168;
const LEVEL_H = 96;
const BOX_W = 152;
const BOX_H = 44;

const seriesCache = new Map<string, Promise<SeriesBody>>();

function fetchSeries(id: string): Promise<SeriesBody> {
  let hit = seriesCache.get(id);
  if (!hit) {
    hit = api.series(id, "raw");
    seriesCache.set(id, hit);
  }
  return hit;
}

function truncate(text: string, max: number): string {
  return text.length <= max ? text : text.slice(0, max - 1) + "…";
}

export function initTreeTab(
  container: HTMLElement,
  catalog: CatalogEntry[],
  tree: TreeNode
): void {
  container.innerHTML = "";
  container.className = "tree-tab";

  const left = document.createElement("div");
  left.className = "tree-left";
  const right = document.createElement("div");
  right.className = "tree-right";
  container.appendChild(left);
  container.appendChild(right);

  const toast = document.createElement("div");
  toast.className = "toast";
  toast.style.display = "none";
  container.appendChild(toast);
  let toastTimer = 0;
  function showToast(text: string): void {
    toast.textContent = text;
    toast.style.display = "block";
    window.clearTimeout(toastTimer);
    toastTimer = window.setTimeout(() => (toast.style.display = "none"), 2600);
  }

  // -- search over leaf titles ------------------------------------------
  const search = document.createElement("input");
  search.type = "search";
  search.placeholder = "Search series titles…";
  search.className = "tree-search";
  left.appendChild(search);
  const results = document.createElement("div");
  results.className = "search-results";
  left.appendChild(results);

  const leaves: { label: string; seriesId: string }[] = [];
  walkTree(tree, (node) => {
    if (node.series_id) leaves.push({ label: node.label, seriesId: node.series_id });
  });

  const titleOf = new Map(catalog.map((e) => [e.series_id, e.title]));

  function renderSearch(): void {
    const query = search.value.trim().toLowerCase();
    results.innerHTML = "";
    if (!query) return;
    const hits = leaves.filter((l) => l.label.toLowerCase().includes(query));
    for (const hit of hits.slice(0, 12)) {
      const row = document.createElement("div");
      row.className = "search-hit";
      row.textContent = hit.label;
      row.title = hit.label;
      makeDraggable(row, hit.seriesId);
      results.appendChild(row);
    }
    if (!hits.length) {
      results.textContent = "no matches";
    }
  }
  search.addEventListener("input", renderSearch);

  // -- tidy tree rendering ----------------------------------------------
  const treeScroll = document.createElement("div");
  treeScroll.className = "tree-scroll";
  left.appendChild(treeScroll);

  // Expansion history, newest last; re-clicking an expanded node collapses
  // it (and anything expanded after it).
  const expansionStack: string[] = [tree.label];

  function drawTree(): void {
    const layouts = layoutTree(tree, new Set(expansionStack));
    const topRow = Math.min(...layouts.map((l) => l.depth));
    const maxLateral = Math.max(...layouts.map((l) => l.lateral));
    const width = (maxLateral + 1) * SLOT_W + 24;
    const height = (Math.max(...layouts.map((l) => l.depth)) - topRow + 1) * LEVEL_H + 20;

    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    svg.setAttribute("width", String(width));
    svg.setAttribute("class", "tree-svg");

    const centerOf = (l: { lateral: number; depth: number }) => ({
      x: l.lateral * SLOT_W + SLOT_W / 2 + 12,
      y: (l.depth - topRow) * LEVEL_H + BOX_H / 2 + 10,
    });
    const byPath = new Map(layouts.map((l) => [l.path, l] as const));

    for (const layout of layouts) {
      if (!layout.parentPath) continue;
      const parent = byPath.get(layout.parentPath);
      if (!parent) continue;
      const a = centerOf(parent);
      const b = centerOf(layout);
      const edge = document.createElementNS(SVG_NS, "path");
      const midY = (a.y + BOX_H / 2 + b.y - BOX_H / 2) / 2;
      edge.setAttribute(
        "d",
        `M${a.x},${a.y + BOX_H / 2}C${a.x},${midY} ${b.x},${midY} ${b.x},${b.y - BOX_H / 2}`
      );
      edge.setAttribute("fill", "none");
      edge.setAttribute("stroke", "#b9b2a7");
      edge.setAttribute("stroke-width", "1.5");
      svg.appendChild(edge);
    }

    for (const layout of layouts) {
      const { x, y } = centerOf(layout);
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("class", "tree-node");

      const rect = document.createElementNS(SVG_NS, "rect");
      rect.setAttribute("x", String(x - BOX_W / 2));
      rect.setAttribute("y", String(y - BOX_H / 2));
      rect.setAttribute("width", String(BOX_W));
      rect.setAttribute("height", String(BOX_H));
      rect.setAttribute("rx", "7");
      const classColor = TREE_CLASS_COLORS[layout.node.color_class] ?? "#888";
      if (layout.node.series_id) {
        rect.setAttribute("fill", classColor);
        rect.setAttribute("fill-opacity", "0.25");
      } else {
        rect.setAttribute("fill", "#f4f1ea");
      }
      rect.setAttribute("stroke", classColor);
      rect.setAttribute("stroke-width", layout.isExpanded ? "3" : "1.5");
      group.appendChild(rect);

      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(x));
      label.setAttribute("y", String(y + 4));
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("class", "tree-label");
      label.textContent = truncate(layout.node.label, 20);
      const hover = document.createElementNS(SVG_NS, "title");
      hover.textContent = layout.node.label;
      group.appendChild(hover);
      group.appendChild(label);

      if (layout.hasChildren) {
        const badge = document.createElementNS(SVG_NS, "text");
        badge.setAttribute("x", String(x + BOX_W / 2 - 12));
        badge.setAttribute("y", String(y - BOX_H / 2 + 14));
        badge.setAttribute("class", "tree-badge");
        badge.textContent = layout.isExpanded ? "−" : "+";
        group.appendChild(badge);
        group.addEventListener("click", () => {
          const at = expansionStack.indexOf(layout.path);
          if (at >= 0) expansionStack.splice(at);
          else expansionStack.push(layout.path);
          drawTree();
        });
      } else if (layout.node.series_id) {
        makeDraggable(group as unknown as HTMLElement, layout.node.series_id);
      }
      svg.appendChild(group);
    }

    treeScroll.innerHTML = "";
    treeScroll.appendChild(svg);
  }

  // -- plot areas ---------------------------------------------------------
  const plots: PlotArea[] = [emptyPlot(1), emptyPlot(2), emptyPlot(3)];
  const plotUis: { box: HTMLElement; list: HTMLElement; chart: HTMLElement; latest: LatestWins }[] = [];

  const hint = document.createElement("p");
  hint.className = "tree-hint";
  hint.textContent =
    "Drag a leaf (or a search hit) into a plot box. Click a plotted item to remove it.";
  right.appendChild(hint);

  for (let i = 0; i < 3; i++) {
    const box = document.createElement("div");
    box.className = "plot-box";
    box.dataset.plot = String(i);
    const header = document.createElement("div");
    header.className = "plot-header";
    const title = document.createElement("span");
    title.textContent = `Plot ${i + 1}`;
    const clear = document.createElement("button");
    clear.textContent = "Clear";
    clear.addEventListener("click", () => {
      plots[i] = clearPlot(plots[i]!);
      renderPlot(i);
    });
    header.appendChild(title);
    header.appendChild(clear);
    const list = document.createElement("div");
    list.className = "plot-members";
    const chart = document.createElement("div");
    box.appendChild(header);
    box.appendChild(list);
    box.appendChild(chart);
    right.appendChild(box);
    plotUis.push({ box, list, chart, latest: new LatestWins() });
  }

  function renderPlot(i: number): void {
    const plot = plots[i]!;
    const ui = plotUis[i]!;
    ui.list.innerHTML = "";
    for (const member of plot.members) {
      const row = document.createElement("button");
      row.className = "plot-member";
      const chip = document.createElement("span");
      chip.className = "chip";
      chip.style.background = plot.colors[member]!;
      row.appendChild(chip);
      const text = titleOf.get(member) ?? member;
      row.appendChild(document.createTextNode(truncate(text, 42)));
      row.title = `${text} (click to remove)`;
      row.addEventListener("click", () => {
        plots[i] = removeFromPlot(plots[i]!, member);
        renderPlot(i);
      });
      ui.list.appendChild(row);
    }

    const plotted = plots[i]!;
    void ui.latest
      .run(() => Promise.all(plotted.members.map(fetchSeries)))
      .then((bodies) => {
        if (!bodies) return;
        const chartSeries: ChartSeries[] = bodies.map((body) => ({
          id: body.series_id,
          title: body.title,
          color: plotted.colors[body.series_id]!,
          observations: body.observations,
        }));
        renderLineChart(ui.chart, chartSeries);
      });
  }

  function dropInto(i: number, seriesId: string): void {
    try {
      plots[i] = addToPlot(plots[i]!, seriesId);
      renderPlot(i);
    } catch (error) {
      showToast((error as Error).message);
    }
  }

  // -- pointer-based drag and drop ----------------------------------------
  function makeDraggable(el: HTMLElement, seriesId: string): void {
    el.classList.add("draggable");
    el.addEventListener("pointerdown", (down) => {
      down.preventDefault();
      const ghost = document.createElement("div");
      ghost.className = "drag-ghost";
      ghost.textContent = truncate(titleOf.get(seriesId) ?? seriesId, 36);
      document.body.appendChild(ghost);
      const move = (ev: PointerEvent) => {
        ghost.style.left = `${ev.clientX + 10}px`;
        ghost.style.top = `${ev.clientY + 10}px`;
        const over = document
          .elementFromPoint(ev.clientX, ev.clientY)
          ?.closest(".plot-box");
        for (const ui of plotUis) ui.box.classList.toggle("drop-target", ui.box === over);
      };
      move(down);
      const up = (ev: PointerEvent) => {
        document.removeEventListener("pointermove", move);
        document.removeEventListener("pointerup", up);
        ghost.remove();
        const target = document
          .elementFromPoint(ev.clientX, ev.clientY)
          ?.closest<HTMLElement>(".plot-box");
        for (const ui of plotUis) ui.box.classList.remove("drop-target");
        if (target?.dataset.plot !== undefined) {
          dropInto(Number(target.dataset.plot), seriesId);
        }
      };
      document.addEventListener("pointermove", move);
      document.addEventListener("pointerup", up);
    });
  }

  drawTree();
  for (let i = 0; i < 3; i++) renderPlot(i);
}
