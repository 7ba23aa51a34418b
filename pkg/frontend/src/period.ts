// Month arithmetic over the API's "YYYY-MM" period strings.

export interface Period {
  year: number;
  month: number; // 1..12
}

export function parsePeriod(text: string): Period {
  const match = /^(\d{4})-(\d{2})$/.exec(text);
  if (!match) throw new Error(`bad period: ${text}`);
  const year = Number(match[1]);
  const month = Number(match[2]);
  if (month < 1 || month > 12) throw new Error(`bad period: ${text}`);
  return { year, month };
}

export function formatPeriod(p: Period): string {
  return `${String(p.year).padStart(4, "0")}-${String(p.month).padStart(2, "0")}`;
}

// Months since 0000-01; adjacent months differ by exactly 1.
export function periodIndex(p: Period): number {
  return p.year * 12 + (p.month - 1);
}

export function periodFromIndex(index: number): Period {
  return { year: Math.floor(index / 12), month: (index % 12) + 1 };
}

const MONTH_NAMES = [
  "Jan", "Feb", "Mar", "Apr", "May", "Jun",
  "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
];

export function periodLabel(text: string): string {
  const p = parsePeriod(text);
  return `${MONTH_NAMES[p.month - 1]} ${p.year}`;
}
