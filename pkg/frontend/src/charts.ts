// SVG multi-series line chart with a cursor guide line and tooltip.

import { Observation } from "./api";
import { cursorLookup, CursorSeries } from "./cursor";
import {
  AXIS_COLOR,
  GRID_COLOR,
  GUIDE_COLOR,
  GUIDE_LINE_WIDTH,
  SERIES_LINE_WIDTH,
} from "./palette";
import { formatPeriod, parsePeriod, periodFromIndex, periodIndex } from "./period";

export interface ChartSeries {
  id: string;
  title: string;
  color: string;
  observations: Observation[];
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svg<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export function niceTicks(min: number, max: number, count: number): number[] {
  if (!(max > min)) return [min];
  const rawStep = (max - min) / Math.max(1, count);
  const magnitude = 10 ** Math.floor(Math.log10(rawStep));
  const residual = rawStep / magnitude;
  const step = (residual >= 5 ? 5 : residual >= 2 ? 2 : 1) * magnitude;
  const ticks: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + step / 1e6; v += step) {
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

// Union month axis across members; values aligned, null where absent.
function buildAxis(seriesList: ChartSeries[]) {
  let lo = Infinity;
  let hi = -Infinity;
  for (const s of seriesList) {
    for (const obs of s.observations) {
      const idx = periodIndex(parsePeriod(obs.period));
      if (idx < lo) lo = idx;
      if (idx > hi) hi = idx;
    }
  }
  if (lo > hi) return { periods: [] as string[], rows: [] as (number | null)[][] };
  const periods: string[] = [];
  for (let idx = lo; idx <= hi; idx++) periods.push(formatPeriod(periodFromIndex(idx)));
  const rows = seriesList.map((s) => {
    const byPeriod = new Map(s.observations.map((o) => [o.period, o.value]));
    return periods.map((p) => byPeriod.get(p) ?? null);
  });
  return { periods, rows };
}

export function renderLineChart(host: HTMLElement, seriesList: ChartSeries[]): void {
  host.textContent = "";
  host.classList.add("chart-host");

  const { periods, rows } = buildAxis(seriesList);
  if (!periods.length) {
    const empty = document.createElement("div");
    empty.className = "chart-empty";
    empty.textContent = "no series selected";
    host.appendChild(empty);
    return;
  }

  const width = 860;
  const height = 240;
  const margin = { top: 12, right: 14, bottom: 24, left: 64 };
  const innerW = width - margin.left - margin.right;
  const innerH = height - margin.top - margin.bottom;

  const values = rows.flat().filter((v): v is number => v !== null);
  let yLo = Math.min(...values);
  let yHi = Math.max(...values);
  if (yLo === yHi) {
    yLo -= 1;
    yHi += 1;
  }
  const pad = (yHi - yLo) * 0.06;
  yLo -= pad;
  yHi += pad;

  const x = (i: number) =>
    margin.left + (periods.length === 1 ? innerW / 2 : (i / (periods.length - 1)) * innerW);
  const y = (v: number) => margin.top + innerH - ((v - yLo) / (yHi - yLo)) * innerH;
  const positions = periods.map((_, i) => x(i));

  const root = svg("svg", {
    viewBox: `0 0 ${width} ${height}`,
    class: "line-chart",
    role: "img",
  });

  for (const tick of niceTicks(yLo, yHi, 5)) {
    root.appendChild(svg("line", {
      x1: margin.left, x2: width - margin.right, y1: y(tick), y2: y(tick),
      stroke: GRID_COLOR, "stroke-width": 1,
    }));
    const label = svg("text", {
      x: margin.left - 8, y: y(tick) + 4, "text-anchor": "end",
      class: "axis-label", fill: AXIS_COLOR,
    });
    label.textContent = tick.toLocaleString("en-US", { maximumFractionDigits: 3 });
    root.appendChild(label);
  }

  const years = periods
    .map((p, i) => ({ p, i }))
    .filter(({ p }) => p.endsWith("-01"));
  const yearStep = Math.max(1, Math.ceil(years.length / 8));
  years.filter((_, k) => k % yearStep === 0).forEach(({ p, i }) => {
    root.appendChild(svg("line", {
      x1: x(i), x2: x(i), y1: margin.top, y2: margin.top + innerH,
      stroke: GRID_COLOR, "stroke-width": 1,
    }));
    const label = svg("text", {
      x: x(i), y: height - 6, "text-anchor": "middle",
      class: "axis-label", fill: AXIS_COLOR,
    });
    label.textContent = p.slice(0, 4);
    root.appendChild(label);
  });

  root.appendChild(svg("rect", {
    x: margin.left, y: margin.top, width: innerW, height: innerH,
    fill: "none", stroke: AXIS_COLOR, "stroke-width": 1,
  }));

  // Data lines sit above the grid and are strictly heavier than the guide.
  rows.forEach((row, s) => {
    let d = "";
    let pen = false;
    row.forEach((v, i) => {
      if (v === null) {
        pen = false;
        return;
      }
      d += `${pen ? "L" : "M"}${x(i).toFixed(1)},${y(v).toFixed(1)}`;
      pen = true;
    });
    root.appendChild(svg("path", {
      d, fill: "none", stroke: seriesList[s]!.color,
      "stroke-width": SERIES_LINE_WIDTH, "stroke-linejoin": "round",
    }));
  });

  const guide = svg("line", {
    x1: 0, x2: 0, y1: margin.top, y2: margin.top + innerH,
    stroke: GUIDE_COLOR, "stroke-width": GUIDE_LINE_WIDTH, visibility: "hidden",
  });
  root.appendChild(guide);

  const tooltip = document.createElement("div");
  tooltip.className = "chart-tooltip";
  tooltip.style.display = "none";

  const overlay = svg("rect", {
    x: margin.left, y: margin.top, width: innerW, height: innerH,
    fill: "transparent",
  });
  const members: CursorSeries[] = seriesList.map((s, i) => ({
    title: s.title,
    color: s.color,
    values: rows[i]!,
  }));

  overlay.addEventListener("mousemove", (event) => {
    const box = root.getBoundingClientRect();
    const pxPerUnit = box.width / width;
    const cursorX = (event.clientX - box.left) / pxPerUnit;
    const hit = cursorLookup(members, periods, cursorX, positions);
    if (!hit) return;
    guide.setAttribute("x1", String(positions[hit.index]));
    guide.setAttribute("x2", String(positions[hit.index]));
    guide.setAttribute("visibility", "visible");
    tooltip.style.display = "block";
    tooltip.innerHTML = "";
    const head = document.createElement("div");
    head.className = "tooltip-period";
    head.textContent = hit.period;
    tooltip.appendChild(head);
    for (const row of hit.rows) {
      const line = document.createElement("div");
      const chip = document.createElement("span");
      chip.className = "chip";
      chip.style.background = row.color;
      line.appendChild(chip);
      line.appendChild(document.createTextNode(`${row.title}: ${row.text}`));
      tooltip.appendChild(line);
    }
    const hostBox = host.getBoundingClientRect();
    const left = event.clientX - hostBox.left;
    tooltip.style.left = `${Math.min(left + 14, hostBox.width - 230)}px`;
    tooltip.style.top = `${event.clientY - hostBox.top + 12}px`;
  });
  overlay.addEventListener("mouseleave", () => {
    guide.setAttribute("visibility", "hidden");
    tooltip.style.display = "none";
  });
  root.appendChild(overlay);

  host.appendChild(root);
  host.appendChild(tooltip);
}
