// Geography tab: state choropleth with dataset picker, seasonal-adjustment
// and percent-change checkboxes behind an explicit refresh action, a
// single-month period slider, selectable color scale, legend, hover
// tooltip, and click-to-zoom.

import { api, ApiError, CatalogEntry, GeoBody, LatestWins } from "../api";
import {
  divergingColor,
  NO_DATA_FILL,
  sequentialColor,
  STATE_BORDER,
} from "../palette";
import { formatPeriod, parsePeriod, periodFromIndex, periodIndex, periodLabel } from "../period";
import { MAP_HEIGHT, MAP_WIDTH, STATE_SHAPES } from "../stateShapes.gen";

const SVG_NS = "http://www.w3.org/2000/svg";

type ScaleKind = "sequential" | "diverging";

interface ScaleInfo {
  kind: ScaleKind;
  lo: number;
  hi: number;
  color(value: number): string;
}

function buildScale(kind: ScaleKind, values: number[]): ScaleInfo {
  if (!values.length) {
    return { kind, lo: 0, hi: 1, color: () => NO_DATA_FILL };
  }
  if (kind === "diverging") {
    // centered at zero: equal color distance for equal magnitude
    const magnitude = Math.max(...values.map((v) => Math.abs(v)), 1e-9);
    return {
      kind,
      lo: -magnitude,
      hi: magnitude,
      color: (v) => divergingColor(0.5 + v / (2 * magnitude)),
    };
  }
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  return {
    kind,
    lo,
    hi,
    color: (v) => sequentialColor(hi === lo ? 0.5 : (v - lo) / (hi - lo)),
  };
}

export function initGeographyTab(
  container: HTMLElement,
  catalog: CatalogEntry[]
): void {
  container.innerHTML = "";

  const geoEntries = catalog.filter((e) => e.dataset !== null && e.fips !== null);

  const controls = document.createElement("div");
  controls.className = "geo-controls";

  const datasetSelect = document.createElement("select");
  const surveys = [...new Set(geoEntries.map((e) => e.survey))].sort();
  for (const survey of surveys) {
    const group = document.createElement("optgroup");
    group.label = survey;
    const keys = [...new Set(
      geoEntries.filter((e) => e.survey === survey).map((e) => e.dataset!)
    )].sort();
    for (const key of keys) {
      const option = document.createElement("option");
      option.value = key;
      option.textContent = key.endsWith("|-") ? key.slice(0, -2) : key.replace("|", " - ");
      group.appendChild(option);
    }
    datasetSelect.appendChild(group);
  }

  const adjustedBox = document.createElement("input");
  adjustedBox.type = "checkbox";
  adjustedBox.checked = true;
  const deltaBox = document.createElement("input");
  deltaBox.type = "checkbox";

  const applyButton = document.createElement("button");
  applyButton.textContent = "Change Database";

  const scaleSelect = document.createElement("select");
  for (const [value, label] of [
    ["sequential", "Sequential (Blues)"],
    ["diverging", "Diverging (RdBu)"],
  ] as const) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = label;
    scaleSelect.appendChild(option);
  }

  const labelled = (text: string, el: HTMLElement) => {
    const label = document.createElement("label");
    label.appendChild(el);
    label.appendChild(document.createTextNode(` ${text}`));
    return label;
  };
  controls.appendChild(datasetSelect);
  controls.appendChild(labelled("seasonally adjusted", adjustedBox));
  controls.appendChild(labelled("percent change", deltaBox));
  controls.appendChild(applyButton);
  controls.appendChild(scaleSelect);
  container.appendChild(controls);

  const sliderRow = document.createElement("div");
  sliderRow.className = "geo-slider";
  const periodInput = document.createElement("input");
  periodInput.type = "range";
  const periodOut = document.createElement("output");
  sliderRow.appendChild(document.createTextNode("Period "));
  sliderRow.appendChild(periodInput);
  sliderRow.appendChild(periodOut);
  container.appendChild(sliderRow);

  const message = document.createElement("div");
  message.className = "geo-message";
  container.appendChild(message);

  const mapWrap = document.createElement("div");
  mapWrap.className = "map-wrap";
  const svg = document.createElementNS(SVG_NS, "svg");
  const HOME_VIEW = `0 0 ${MAP_WIDTH} ${MAP_HEIGHT}`;
  svg.setAttribute("viewBox", HOME_VIEW);
  svg.setAttribute("class", "us-map");
  mapWrap.appendChild(svg);
  const tooltip = document.createElement("div");
  tooltip.className = "chart-tooltip";
  tooltip.style.display = "none";
  mapWrap.appendChild(tooltip);
  container.appendChild(mapWrap);

  const legend = document.createElement("div");
  legend.className = "legend";
  container.appendChild(legend);

  const statePaths = new Map<string, SVGPathElement>();
  for (const [fips, shape] of Object.entries(STATE_SHAPES)) {
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", shape.path);
    path.setAttribute("fill", NO_DATA_FILL);
    path.setAttribute("stroke", STATE_BORDER);
    path.setAttribute("stroke-width", "1");
    path.dataset.fips = fips;
    svg.appendChild(path);
    statePaths.set(fips, path);
  }

  let zoomedFips: string | null = null;
  let slice: GeoBody | null = null;
  let sliderBase = 0; // period index of the slider's 0 position
  const latestSlice = new LatestWins();

  function renderLegend(scale: ScaleInfo): void {
    legend.innerHTML = "";
    const bar = document.createElement("div");
    bar.className = "legend-bar";
    const stops: string[] = [];
    for (let i = 0; i <= 20; i++) {
      const t = i / 20;
      const color = scale.kind === "diverging" ? divergingColor(t) : sequentialColor(t);
      stops.push(`${color} ${t * 100}%`);
    }
    bar.style.background = `linear-gradient(to right, ${stops.join(", ")})`;
    const labels = document.createElement("div");
    labels.className = "legend-labels";
    const fmt = (v: number) => v.toLocaleString("en-US", { maximumFractionDigits: 2 });
    labels.innerHTML = `<span></span><span></span><span></span>`;
    labels.children[0]!.textContent = fmt(scale.lo);
    labels.children[1]!.textContent = scale.kind === "diverging" ? "0" : "";
    labels.children[2]!.textContent = fmt(scale.hi);
    const noData = document.createElement("div");
    noData.className = "legend-nodata";
    const chip = document.createElement("span");
    chip.className = "chip";
    chip.style.background = NO_DATA_FILL;
    noData.appendChild(chip);
    noData.appendChild(document.createTextNode(" no data"));
    legend.appendChild(bar);
    legend.appendChild(labels);
    legend.appendChild(noData);
  }

  function paint(): void {
    if (!slice) return;
    const populated = Object.values(slice.values).filter(
      (v): v is number => v !== null
    );
    const scale = buildScale(scaleSelect.value as ScaleKind, populated);
    for (const [fips, path] of statePaths) {
      const value = slice.values[fips] ?? null;
      path.setAttribute("fill", value === null ? NO_DATA_FILL : scale.color(value));
    }
    renderLegend(scale);
  }

  async function loadSlice(): Promise<void> {
    const period = formatPeriod(periodFromIndex(sliderBase + Number(periodInput.value)));
    periodOut.textContent = periodLabel(period);
    try {
      const body = await latestSlice.run(() =>
        api.geo(datasetSelect.value, period, adjustedBox.checked, deltaBox.checked)
      );
      if (!body) return;
      slice = body;
      message.textContent = "";
      paint();
    } catch (error) {
      if (error instanceof ApiError) {
        message.textContent = `${error.name}: ${error.message}`;
      } else {
        message.textContent = String(error);
      }
    }
  }

  // The checkboxes and dataset picker take effect on the explicit refresh.
  async function applySelection(): Promise<void> {
    const member = geoEntries.find(
      (e) => e.dataset === datasetSelect.value && e.adjusted === adjustedBox.checked
    );
    if (!member) {
      message.textContent = "no series in this dataset at that adjustment";
      return;
    }
    if (deltaBox.checked) scaleSelect.value = "diverging";
    try {
      const span = await api.series(member.series_id, "raw");
      const first = periodIndex(parsePeriod(span.observations[0]!.period));
      const last = periodIndex(
        parsePeriod(span.observations[span.observations.length - 1]!.period)
      );
      sliderBase = first;
      periodInput.min = "0";
      periodInput.max = String(last - first);
      periodInput.value = periodInput.max;
      await loadSlice();
    } catch (error) {
      message.textContent = String(error);
    }
  }

  applyButton.addEventListener("click", () => void applySelection());
  scaleSelect.addEventListener("change", paint);
  periodInput.addEventListener("input", () => void loadSlice());

  svg.addEventListener("mousemove", (event) => {
    const target = event.target as SVGElement;
    const fips = target.dataset?.fips;
    if (!fips || !slice) {
      tooltip.style.display = "none";
      return;
    }
    const shape = STATE_SHAPES[fips]!;
    const value = slice.values[fips] ?? null;
    tooltip.style.display = "block";
    tooltip.textContent = `${shape.name}: ${
      value === null
        ? "no data"
        : value.toLocaleString("en-US", { maximumFractionDigits: 3 })
    }`;
    const box = mapWrap.getBoundingClientRect();
    tooltip.style.left = `${event.clientX - box.left + 12}px`;
    tooltip.style.top = `${event.clientY - box.top + 12}px`;
  });
  svg.addEventListener("mouseleave", () => {
    tooltip.style.display = "none";
  });

  // Click a state to zoom to it; click it again (or the background) to
  // return to the full map.
  svg.addEventListener("click", (event) => {
    const fips = (event.target as SVGElement).dataset?.fips ?? null;
    if (fips && fips !== zoomedFips) {
      const [minX, minY, maxX, maxY] = STATE_SHAPES[fips]!.bounds;
      const padX = (maxX - minX) * 0.3 + 10;
      const padY = (maxY - minY) * 0.3 + 10;
      svg.setAttribute(
        "viewBox",
        `${minX - padX} ${minY - padY} ${maxX - minX + 2 * padX} ${maxY - minY + 2 * padY}`
      );
      zoomedFips = fips;
    } else {
      svg.setAttribute("viewBox", HOME_VIEW);
      zoomedFips = null;
    }
  });

  void applySelection();
}
