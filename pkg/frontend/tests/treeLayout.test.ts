// Layout aesthetics, property-tested over random trees:
//   A1  equal depth -> equal depth coordinate
//   A2  sibling lateral order = child-list order
//   A3  parent centered on its extreme visible children (tolerance 0.5)
// plus the bottom-two-levels visibility window and UnknownPath.

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";
import {
  childPath,
  layoutTree,
  PATH_SEP,
  TreeNode,
  TreeNodeLayout,
  UnknownPath,
  walkTree,
} from "../src/treeLayout";

const fixtureTree: TreeNode = JSON.parse(
  readFileSync(new URL("./fixtures/tree.json", import.meta.url), "utf8")
);

// Deterministic RNG so failures reproduce.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function randomTree(rng: () => number, maxNodes: number): TreeNode {
  let made = 0;
  let label = 0;
  const make = (depth: number): TreeNode => {
    made++;
    const node: TreeNode = { label: `n${label++}`, color_class: "dimensional" };
    const budget = maxNodes - made;
    if (budget > 0 && depth < 6 && rng() < 0.75) {
      const fanout = 1 + Math.floor(rng() * Math.min(5, budget));
      node.children = [];
      for (let i = 0; i < fanout && made < maxNodes; i++) {
        node.children.push(make(depth + 1));
      }
    }
    return node;
  };
  return make(0);
}

function randomExpansion(root: TreeNode, rng: () => number): Set<string> {
  const internal: string[] = [];
  walkTree(root, (node, path) => {
    if (node.children?.length) internal.push(path);
  });
  const expanded = new Set<string>();
  for (const path of internal) {
    if (rng() < 0.45) expanded.add(path);
  }
  return expanded;
}

function assertAesthetics(root: TreeNode, layouts: TreeNodeLayout[]): void {
  expect(layouts.length).toBeGreaterThan(0);

  // A1: exactly one depth coordinate per visible level, and only the two
  // bottom-most revealed levels are drawn.
  const depths = [...new Set(layouts.map((l) => l.depth))].sort((a, b) => a - b);
  expect(depths.length).toBeLessThanOrEqual(2);
  if (depths.length === 2) expect(depths[1]! - depths[0]!).toBe(1);

  const byPath = new Map(layouts.map((l) => [l.path, l] as const));

  // A2: visible children of one parent keep child-list order.
  for (const layout of layouts) {
    const children = layout.node.children ?? [];
    const visibleChildLayouts = children
      .map((c) => byPath.get(childPath(layout.path, c.label)))
      .filter((x): x is TreeNodeLayout => x !== undefined);
    for (let i = 1; i < visibleChildLayouts.length; i++) {
      expect(visibleChildLayouts[i]!.lateral).toBeGreaterThan(
        visibleChildLayouts[i - 1]!.lateral
      );
    }

    // A3: parent at the midpoint of its extreme visible children.
    if (visibleChildLayouts.length) {
      const first = visibleChildLayouts[0]!.lateral;
      const last = visibleChildLayouts[visibleChildLayouts.length - 1]!.lateral;
      expect(Math.abs(layout.lateral - (first + last) / 2)).toBeLessThanOrEqual(0.5);
    }
  }

  // No two nodes of one level share a lateral slot.
  for (const depth of depths) {
    const laterals = layouts.filter((l) => l.depth === depth).map((l) => l.lateral);
    expect(new Set(laterals).size).toBe(laterals.length);
  }
}

describe("layoutTree", () => {
  it("holds A1-A3 over 150 random trees with random expansions", () => {
    const rng = mulberry32(47);
    for (let round = 0; round < 150; round++) {
      const root = randomTree(rng, 2 + Math.floor(rng() * 199));
      const expanded = randomExpansion(root, rng);
      assertAesthetics(root, layoutTree(root, expanded));
    }
  });

  it("lays out the symmetric trivial case exactly", () => {
    const root: TreeNode = {
      label: "r",
      color_class: "dimensional",
      children: [
        { label: "a", color_class: "dimensional" },
        { label: "b", color_class: "dimensional" },
        { label: "c", color_class: "dimensional" },
      ],
    };
    const layouts = layoutTree(root, new Set(["r"]));
    const byLabel = new Map(layouts.map((l) => [l.node.label, l]));
    expect(byLabel.get("a")!.lateral).toBe(0);
    expect(byLabel.get("b")!.lateral).toBe(1);
    expect(byLabel.get("c")!.lateral).toBe(2);
    expect(byLabel.get("r")!.lateral).toBe(1); // centered on the middle child
    expect(new Set(layouts.filter((l) => l.depth === 1).map((l) => l.depth)).size).toBe(1);
  });

  it("pushes the first level off-view when a child expands", () => {
    const root: TreeNode = {
      label: "r",
      color_class: "dimensional",
      children: [
        { label: "a", color_class: "dimensional" },
        {
          label: "b",
          color_class: "dimensional",
          children: [
            { label: "b1", color_class: "dimensional" },
            { label: "b2", color_class: "dimensional" },
          ],
        },
        { label: "c", color_class: "dimensional" },
      ],
    };
    const deep = layoutTree(root, new Set(["r", "r" + PATH_SEP + "b"]));
    expect(deep.some((l) => l.node.label === "r")).toBe(false); // level 0 gone
    const labels = new Set(deep.map((l) => l.node.label));
    expect(labels).toEqual(new Set(["a", "b", "c", "b1", "b2"]));
    const byLabel = new Map(deep.map((l) => [l.node.label, l]));
    expect(byLabel.get("b")!.lateral).toBe(
      (byLabel.get("b1")!.lateral + byLabel.get("b2")!.lateral) / 2
    );

    // collapsing the last expanded parent brings the previous level back
    const collapsed = layoutTree(root, new Set(["r"]));
    expect(collapsed.some((l) => l.node.label === "r")).toBe(true);
    expect(collapsed.some((l) => l.node.label === "b1")).toBe(false);
  });

  it("shows only the root before anything expands", () => {
    const layouts = layoutTree(fixtureTree, new Set());
    expect(layouts.length).toBe(1);
    expect(layouts[0]!.node.label).toBe(fixtureTree.label);
    expect(layouts[0]!.hasChildren).toBe(true);
  });

  it("rejects unknown expansion paths", () => {
    expect(() => layoutTree(fixtureTree, new Set(["no-such-root"]))).toThrow(UnknownPath);
    const bogusChild = childPath(fixtureTree.label, "never-a-survey");
    expect(() => layoutTree(fixtureTree, new Set([bogusChild]))).toThrow(UnknownPath);
  });

  it("lays out the real catalog tree fully expanded", () => {
    const expanded = new Set<string>();
    walkTree(fixtureTree, (node, path) => {
      if (node.children?.length) expanded.add(path);
    });
    const layouts = layoutTree(fixtureTree, expanded);
    assertAesthetics(fixtureTree, layouts);
    // bottom row of the fixture tree is all leaves with series ids
    const bottom = Math.max(...layouts.map((l) => l.depth));
    for (const layout of layouts.filter((l) => l.depth === bottom)) {
      expect(layout.node.series_id).toBeTruthy();
    }
  });
});
