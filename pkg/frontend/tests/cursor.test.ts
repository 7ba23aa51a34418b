// Hover cursor behaviour: snap to the nearest month and report "missing"
// when the snapped month has no observation, driven by a recorded API
// response that contains a genuine null.

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";
import { cursorLookup, formatValue, MISSING_TEXT, nearestIndex } from "../src/cursor";

interface SeriesBody {
  series_id: string;
  title: string;
  observations: Array<{ period: string; value: number | null }>;
}

const withNull: SeriesBody = JSON.parse(
  readFileSync(new URL("./fixtures/series_with_null.json", import.meta.url), "utf8")
);

const periods = withNull.observations.map((o) => o.period);
const values = withNull.observations.map((o) => o.value);
// one x pixel per month, 40px apart
const positions = periods.map((_, i) => 40 * i);

const member = { title: withNull.title, color: "#1b9e77", values };

describe("nearestIndex", () => {
  it("snaps to the closer of two neighbouring months", () => {
    // 70% of the way from month 3 to month 4 -> month 4
    expect(nearestIndex(3 * 40 + 28, positions)).toBe(4);
    // 30% of the way -> month 3
    expect(nearestIndex(3 * 40 + 12, positions)).toBe(3);
  });

  it("resolves an exact midpoint to the earlier month", () => {
    expect(nearestIndex(3 * 40 + 20, positions)).toBe(3);
  });

  it("clamps beyond either end of the axis", () => {
    expect(nearestIndex(-500, positions)).toBe(0);
    expect(nearestIndex(10 ** 6, positions)).toBe(positions.length - 1);
  });
});

describe("cursorLookup", () => {
  it("returns the snapped month and a numeric row for a present value", () => {
    const at = periods.indexOf("2005-01");
    const hit = cursorLookup([member], periods, positions[at]! + 3, positions);
    expect(hit).not.toBeNull();
    expect(hit!.index).toBe(at);
    expect(hit!.period).toBe("2005-01");
    expect(hit!.rows).toHaveLength(1);
    expect(hit!.rows[0]!.title).toBe(withNull.title);
    expect(hit!.rows[0]!.text).toBe(formatValue(values[at]!));
    expect(hit!.rows[0]!.text).not.toBe(MISSING_TEXT);
  });

  it(`reports "${MISSING_TEXT}" for a null observation`, () => {
    const at = periods.indexOf("2005-03");
    expect(at).toBeGreaterThanOrEqual(0);
    expect(values[at]).toBeNull(); // the fixture really has a hole here
    const hit = cursorLookup([member], periods, positions[at]!, positions);
    expect(hit!.period).toBe("2005-03");
    expect(hit!.rows[0]!.text).toBe(MISSING_TEXT);
  });

  it("reports every member at the same snapped month", () => {
    const other = {
      title: "steady line",
      color: "#d95f02",
      values: periods.map(() => 1.5),
    };
    const at = periods.indexOf("2005-03");
    const hit = cursorLookup([member, other], periods, positions[at]! - 7, positions);
    expect(hit!.period).toBe("2005-03");
    expect(hit!.rows.map((r) => r.text)).toEqual([MISSING_TEXT, "1.5"]);
    expect(hit!.rows.map((r) => r.color)).toEqual(["#1b9e77", "#d95f02"]);
  });

  it("returns null when the chart is empty", () => {
    expect(cursorLookup([], periods, 0, positions)).toBeNull();
    expect(cursorLookup([member], [], 0, [])).toBeNull();
  });
});

describe("formatValue", () => {
  it("spells out a missing value", () => {
    expect(formatValue(null)).toBe(MISSING_TEXT);
  });

  it("keeps numbers readable", () => {
    expect(formatValue(5.4)).toBe("5.4");
    expect(formatValue(140000)).toBe("140,000");
  });
});
