// Time Series tab: headline strip, two stacked charts with independent
// series selectors, one shared year-range slider windowing both.

import { api, CatalogEntry, LatestWins, SeriesBody } from "../api";
import { ChartSeries, renderLineChart } from "../charts";
import { SERIES_PALETTE } from "../palette";
import { parsePeriod } from "../period";

interface ChartSlot {
  select: HTMLSelectElement;
  host: HTMLElement;
  latest: LatestWins;
  body: SeriesBody | null;
}

const seriesCache = new Map<string, Promise<SeriesBody>>();

function fetchSeries(id: string): Promise<SeriesBody> {
  let hit = seriesCache.get(id);
  if (!hit) {
    hit = api.series(id, "raw");
    seriesCache.set(id, hit);
  }
  return hit;
}

function groupedSelect(catalog: CatalogEntry[]): HTMLSelectElement {
  const select = document.createElement("select");
  select.className = "series-select";
  const surveys = [...new Set(catalog.map((e) => e.survey))].sort();
  for (const survey of surveys) {
    const group = document.createElement("optgroup");
    group.label = survey;
    const entries = catalog
      .filter((e) => e.survey === survey)
      .sort((a, b) => a.title.localeCompare(b.title));
    for (const entry of entries) {
      const option = document.createElement("option");
      option.value = entry.series_id;
      option.textContent = entry.title;
      group.appendChild(option);
    }
    select.appendChild(group);
  }
  return select;
}

function signed(value: number | null, suffix = ""): string {
  if (value === null) return "n/a";
  const text = value.toLocaleString("en-US", { maximumFractionDigits: 1 });
  return `${value > 0 ? "+" : ""}${text}${suffix}`;
}

async function renderHeadline(host: HTMLElement): Promise<void> {
  try {
    const headline = await api.headline();
    host.innerHTML = "";
    const card = (label: string, value: string, delta: string) => {
      const div = document.createElement("div");
      div.className = "headline-card";
      div.innerHTML =
        `<div class="headline-label"></div>` +
        `<div class="headline-value"></div>` +
        `<div class="headline-delta"></div>`;
      div.children[0]!.textContent = label;
      div.children[1]!.textContent = value;
      div.children[2]!.textContent = delta;
      return div;
    };
    const rate =
      headline.unemployment_rate === null ? "n/a" : `${headline.unemployment_rate}%`;
    const jobs =
      headline.nonfarm_level === null
        ? "n/a"
        : `${headline.nonfarm_level.toLocaleString("en-US")}K`;
    host.appendChild(
      card(`Unemployment rate (${headline.period})`, rate, `${signed(headline.rate_delta)} vs prior month`)
    );
    host.appendChild(
      card(`Nonfarm payrolls (${headline.period})`, jobs, `${signed(headline.nonfarm_delta, "K")} vs prior month`)
    );
  } catch (error) {
    host.textContent = `headline unavailable: ${(error as Error).message}`;
  }
}

export function initTimeSeriesTab(
  container: HTMLElement,
  catalog: CatalogEntry[]
): void {
  container.innerHTML = "";

  const headline = document.createElement("div");
  headline.className = "headline-strip";
  container.appendChild(headline);
  void renderHeadline(headline);

  const slider = document.createElement("div");
  slider.className = "year-slider";
  slider.innerHTML =
    `<span class="slider-label">Years</span>` +
    `<input type="range" class="from"><output class="from-out"></output>` +
    `<input type="range" class="to"><output class="to-out"></output>`;
  const fromInput = slider.querySelector<HTMLInputElement>("input.from")!;
  const toInput = slider.querySelector<HTMLInputElement>("input.to")!;
  const fromOut = slider.querySelector<HTMLOutputElement>("output.from-out")!;
  const toOut = slider.querySelector<HTMLOutputElement>("output.to-out")!;
  container.appendChild(slider);

  const slots: ChartSlot[] = [];
  const defaults = [
    catalog.find((e) => e.series_id === "LNS14000000")?.series_id ??
      catalog[0]?.series_id,
    catalog.find((e) => e.series_id === "CES0000000001")?.series_id ??
      catalog[1]?.series_id ?? catalog[0]?.series_id,
  ];

  for (const fallback of defaults) {
    const section = document.createElement("section");
    section.className = "chart-section";
    const select = groupedSelect(catalog);
    if (fallback) select.value = fallback;
    const host = document.createElement("div");
    section.appendChild(select);
    section.appendChild(host);
    container.appendChild(section);
    const slot: ChartSlot = { select, host, latest: new LatestWins(), body: null };
    select.addEventListener("change", () => void loadSlot(slot));
    slots.push(slot);
  }

  function yearBounds(): [number, number] {
    let lo = Infinity;
    let hi = -Infinity;
    for (const slot of slots) {
      for (const obs of slot.body?.observations ?? []) {
        const year = parsePeriod(obs.period).year;
        if (year < lo) lo = year;
        if (year > hi) hi = year;
      }
    }
    if (lo > hi) return [2000, 2015];
    return [lo, hi];
  }

  function syncSlider(): void {
    const [lo, hi] = yearBounds();
    for (const input of [fromInput, toInput]) {
      input.min = String(lo);
      input.max = String(hi);
    }
    if (!fromInput.value || Number(fromInput.value) < lo) fromInput.value = String(lo);
    if (!toInput.value || Number(toInput.value) > hi) toInput.value = String(hi);
    fromOut.textContent = fromInput.value;
    toOut.textContent = toInput.value;
  }

  function windowOf(body: SeriesBody, colorIndex: number): ChartSeries {
    const from = Number(fromInput.value);
    const to = Number(toInput.value);
    return {
      id: body.series_id,
      title: body.title,
      color: SERIES_PALETTE[colorIndex]!,
      observations: body.observations.filter((obs) => {
        const year = parsePeriod(obs.period).year;
        return year >= from && year <= to;
      }),
    };
  }

  // The one slider drives both charts.
  function redraw(): void {
    syncSlider();
    slots.forEach((slot, i) => {
      renderLineChart(slot.host, slot.body ? [windowOf(slot.body, i)] : []);
    });
  }

  for (const input of [fromInput, toInput]) {
    input.addEventListener("input", () => {
      if (Number(fromInput.value) > Number(toInput.value)) {
        (input === fromInput ? toInput : fromInput).value = input.value;
      }
      redraw();
    });
  }

  async function loadSlot(slot: ChartSlot): Promise<void> {
    const id = slot.select.value;
    const body = await slot.latest.run(() => fetchSeries(id));
    if (!body) return; // a newer selection superseded this load
    slot.body = body;
    redraw();
  }

  for (const slot of slots) void loadSlot(slot);
}
