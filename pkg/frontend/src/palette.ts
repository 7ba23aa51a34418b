// The theme file: every color constant in the app lives here.

// Qualitative 6-color assignment pool for plotted series (ColorBrewer Dark2).
export const SERIES_PALETTE: readonly string[] = [
  "#1b9e77",
  "#d95f02",
  "#7570b3",
  "#e7298a",
  "#66a61e",
  "#e6ab02",
];

// Sequential ramp for level choropleths (ColorBrewer Blues).
const BLUES = [
  "#f7fbff", "#deebf7", "#c6dbef", "#9ecae1", "#6baed6",
  "#4292c6", "#2171b5", "#08519c", "#08306b",
];

// Diverging ramp for percent-change choropleths (ColorBrewer RdBu),
// red = falling, blue = rising, white at zero.
const RDBU = [
  "#67001f", "#b2182b", "#d6604d", "#f4a582", "#fddbc7", "#f7f7f7",
  "#d1e5f0", "#92c5de", "#4393c3", "#2166ac", "#053061",
];

// States with no value in the current slice: a warm gray that sits on
// neither ramp, so missing never reads as an extreme.
export const NO_DATA_FILL = "#b8b2a8";

export const STATE_BORDER = "#ffffff";

// Cursor guide is thinner and grayer than any data line.
export const GUIDE_COLOR = "#999999";
export const GUIDE_LINE_WIDTH = 1;
export const SERIES_LINE_WIDTH = 2;

export const AXIS_COLOR = "#666666";
export const GRID_COLOR = "#e3e3e3";

// Catalog tree classes: orange for dimensional measures, green for rates.
export const TREE_CLASS_COLORS: Record<string, string> = {
  dimensional: "#e6873c",
  rate: "#3d9a46",
};

function hexChannel(hex: string, at: number): number {
  return parseInt(hex.slice(at, at + 2), 16);
}

function mix(a: string, b: string, t: number): string {
  const channel = (at: number) =>
    Math.round(hexChannel(a, at) + (hexChannel(b, at) - hexChannel(a, at)) * t);
  const to2 = (n: number) => n.toString(16).padStart(2, "0");
  return `#${to2(channel(1))}${to2(channel(3))}${to2(channel(5))}`;
}

function ramp(stops: string[], t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const scaled = clamped * (stops.length - 1);
  const low = Math.min(stops.length - 2, Math.floor(scaled));
  return mix(stops[low]!, stops[low + 1]!, scaled - low);
}

// t in [0, 1] across the data range.
export function sequentialColor(t: number): string {
  return ramp(BLUES, t);
}

// t in [0, 1] with 0.5 at the center (zero when auto-centered).
export function divergingColor(t: number): string {
  return ramp(RDBU, t);
}
