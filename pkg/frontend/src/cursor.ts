// Tooltip lookup for line charts: snap a cursor x-position to the nearest
// month and report every plotted member's value there.

export const MISSING_TEXT = "missing";

export interface CursorSeries {
  title: string;
  color: string;
  values: (number | null)[]; // aligned with the periods axis
}

export interface TooltipRow {
  title: string;
  color: string;
  text: string;
}

export interface CursorResult {
  index: number;
  period: string;
  rows: TooltipRow[];
}

// Nearest position wins; an exact midpoint snaps to the earlier month.
export function nearestIndex(x: number, positions: number[]): number {
  let best = 0;
  let bestDistance = Infinity;
  for (let i = 0; i < positions.length; i++) {
    const distance = Math.abs(positions[i]! - x);
    if (distance < bestDistance) {
      best = i;
      bestDistance = distance;
    }
  }
  return best;
}

export function formatValue(value: number | null): string {
  if (value === null) return MISSING_TEXT;
  return value.toLocaleString("en-US", { maximumFractionDigits: 3 });
}

export function cursorLookup(
  members: CursorSeries[],
  periods: string[],
  x: number,
  positions: number[]
): CursorResult | null {
  if (!members.length || !periods.length) return null;
  const index = nearestIndex(x, positions);
  return {
    index,
    period: periods[index] ?? "",
    rows: members.map((member) => ({
      title: member.title,
      color: member.color,
      text: formatValue(member.values[index] ?? null),
    })),
  };
}
