// Plot membership rules: up to six distinct series per plot, each keeping
// its palette color for as long as it stays plotted.

import { SERIES_PALETTE } from "./palette";

export const PLOT_CAPACITY = 6;

export interface PlotArea {
  index: 1 | 2 | 3;
  members: string[];
  colors: Record<string, string>;
}

export class PlotFull extends Error {
  constructor(plotIndex: number) {
    super(`plot ${plotIndex} already holds ${PLOT_CAPACITY} series`);
    this.name = "PlotFull";
  }
}

export class DuplicateSeries extends Error {
  constructor(seriesId: string) {
    super(`${seriesId} is already plotted`);
    this.name = "DuplicateSeries";
  }
}

export class NotPlotted extends Error {
  constructor(seriesId: string) {
    super(`${seriesId} is not plotted`);
    this.name = "NotPlotted";
  }
}

export function emptyPlot(index: 1 | 2 | 3): PlotArea {
  return { index, members: [], colors: {} };
}

export function addToPlot(plot: PlotArea, seriesId: string): PlotArea {
  if (plot.members.includes(seriesId)) throw new DuplicateSeries(seriesId);
  if (plot.members.length >= PLOT_CAPACITY) throw new PlotFull(plot.index);
  const used = new Set(Object.values(plot.colors));
  const color = SERIES_PALETTE.find((c) => !used.has(c))!;
  return {
    index: plot.index,
    members: [...plot.members, seriesId],
    colors: { ...plot.colors, [seriesId]: color },
  };
}

export function removeFromPlot(plot: PlotArea, seriesId: string): PlotArea {
  if (!plot.members.includes(seriesId)) throw new NotPlotted(seriesId);
  const colors = { ...plot.colors };
  delete colors[seriesId];
  return {
    index: plot.index,
    members: plot.members.filter((m) => m !== seriesId),
    colors,
  };
}

export function clearPlot(plot: PlotArea): PlotArea {
  return emptyPlot(plot.index);
}
