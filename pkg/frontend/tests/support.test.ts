// Smaller behaviours the tabs lean on: the stale-response guard, export
// URL building, the palette, and month arithmetic.

import { describe, expect, it } from "vitest";
import { exportUrl, LatestWins } from "../src/api";
import {
  divergingColor,
  NO_DATA_FILL,
  sequentialColor,
  SERIES_PALETTE,
} from "../src/palette";
import {
  formatPeriod,
  parsePeriod,
  periodFromIndex,
  periodIndex,
  periodLabel,
} from "../src/period";

const sleep = (ms: number) => new Promise<void>((r) => setTimeout(r, ms));

describe("LatestWins", () => {
  it("discards the slow first response once a second request starts", async () => {
    const guard = new LatestWins();
    const first = guard.run(async () => {
      await sleep(30);
      return "stale";
    });
    await sleep(5);
    const second = guard.run(async () => {
      await sleep(5);
      return "fresh";
    });
    expect(await second).toBe("fresh");
    expect(await first).toBeUndefined();
  });

  it("delivers a lone request normally", async () => {
    const guard = new LatestWins();
    expect(await guard.run(async () => 7)).toBe(7);
  });
});

describe("exportUrl", () => {
  it("joins ids and carries the year window", () => {
    const url = exportUrl(["A1", "B2"], "csv", 2005, 2010);
    expect(url).toBe("/api/export?ids=A1%2CB2&format=csv&start=2005&end=2010");
  });

  it("omits absent bounds", () => {
    expect(exportUrl(["A1"], "json")).toBe("/api/export?ids=A1&format=json");
  });
});

describe("palette", () => {
  it("offers six distinct series colors", () => {
    expect(SERIES_PALETTE).toHaveLength(6);
    expect(new Set(SERIES_PALETTE).size).toBe(6);
    for (const color of SERIES_PALETTE) expect(color).toMatch(/^#[0-9a-f]{6}$/);
  });

  it("keeps the no-data fill off both color ramps", () => {
    for (const t of [0, 0.25, 0.5, 0.75, 1]) {
      expect(sequentialColor(t)).not.toBe(NO_DATA_FILL);
      expect(divergingColor(t)).not.toBe(NO_DATA_FILL);
    }
  });

  it("runs the sequential ramp light-to-dark and the diverging ramp red-to-blue", () => {
    // sequential: higher t must be darker (smaller channel sum)
    const channelSum = (hex: string) =>
      parseInt(hex.slice(1, 3), 16) + parseInt(hex.slice(3, 5), 16) + parseInt(hex.slice(5, 7), 16);
    expect(channelSum(sequentialColor(0.9))).toBeLessThan(channelSum(sequentialColor(0.1)));
    // diverging: red end for falling values, blue end for rising, neutral middle
    const red = (hex: string) => parseInt(hex.slice(1, 3), 16);
    const blue = (hex: string) => parseInt(hex.slice(5, 7), 16);
    expect(red(divergingColor(0))).toBeGreaterThan(blue(divergingColor(0)));
    expect(blue(divergingColor(1))).toBeGreaterThan(red(divergingColor(1)));
    expect(Math.abs(red(divergingColor(0.5)) - blue(divergingColor(0.5)))).toBeLessThan(40);
  });

  it("clamps ramp input outside [0, 1]", () => {
    expect(sequentialColor(-3)).toBe(sequentialColor(0));
    expect(sequentialColor(42)).toBe(sequentialColor(1));
    expect(divergingColor(-1)).toBe(divergingColor(0));
  });
});

describe("period arithmetic", () => {
  it("round-trips parse and format", () => {
    for (const text of ["2000-01", "2015-02", "1999-12"]) {
      expect(formatPeriod(parsePeriod(text))).toBe(text);
    }
  });

  it("rejects malformed period strings", () => {
    for (const bad of ["2015-2", "2015/02", "201502", "2015-13", "abcd-ef"]) {
      expect(() => parsePeriod(bad)).toThrow();
    }
  });

  it("maps periods onto a contiguous month index", () => {
    const a = periodIndex(parsePeriod("2014-12"));
    const b = periodIndex(parsePeriod("2015-01"));
    expect(b - a).toBe(1);
    expect(formatPeriod(periodFromIndex(b))).toBe("2015-01");
  });

  it("labels months for people", () => {
    expect(periodLabel("2015-02")).toBe("Feb 2015");
  });
});
