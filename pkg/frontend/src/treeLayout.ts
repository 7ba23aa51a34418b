// Collapsible tidy layout for the catalog tree.
//
// Aesthetic guarantees, property-tested in tests/treeLayout.test.ts:
//   A1: visible nodes of equal depth share one depth coordinate (depth
//       itself is the coordinate; the renderer maps it to pixels).
//   A2: sibling lateral order equals child-list order.
//   A3: every visible parent sits at the exact midpoint of its extreme
//       visible children.
// Visibility: a node is revealed when its whole parent chain is expanded;
// with D the deepest revealed depth, only depths D-1 and D are drawn, so
// expanding one level deeper pushes the top row out of view. Collapsing
// (removing the last-expanded path) brings it back.

export interface TreeNode {
  label: string;
  color_class: string;
  series_id?: string;
  children?: TreeNode[];
}

export interface TreeNodeLayout {
  node: TreeNode;
  path: string;
  parentPath: string | null; // null when the parent row is off-view
  depth: number;
  lateral: number;
  hasChildren: boolean;
  isExpanded: boolean;
}

// Sibling labels are unique (the catalog groups children by key), so a
// label chain identifies a node. The separator never occurs in titles.
export const PATH_SEP = "";

export class UnknownPath extends Error {
  constructor(path: string) {
    super(`no such tree path: ${path.split(PATH_SEP).join(" > ")}`);
    this.name = "UnknownPath";
  }
}

export function childPath(parentPath: string, label: string): string {
  return parentPath + PATH_SEP + label;
}

export function walkTree(
  root: TreeNode,
  visit: (node: TreeNode, path: string, depth: number) => void
): void {
  const descend = (node: TreeNode, path: string, depth: number) => {
    visit(node, path, depth);
    for (const child of node.children ?? []) {
      descend(child, childPath(path, child.label), depth + 1);
    }
  };
  descend(root, root.label, 0);
}

export function layoutTree(
  root: TreeNode,
  expanded: ReadonlySet<string>
): TreeNodeLayout[] {
  const known = new Set<string>();
  walkTree(root, (_node, path) => known.add(path));
  for (const path of expanded) {
    if (!known.has(path)) throw new UnknownPath(path);
  }

  // Pass 1: reveal depths. Children are revealed only under an expanded,
  // revealed parent.
  let deepest = 0;
  const reveal = (node: TreeNode, path: string, depth: number) => {
    if (depth > deepest) deepest = depth;
    if (!expanded.has(path)) return;
    for (const child of node.children ?? []) {
      reveal(child, childPath(path, child.label), depth + 1);
    }
  };
  reveal(root, root.label, 0);

  const topRow = Math.max(0, deepest - 1);
  const layouts: TreeNodeLayout[] = [];
  let nextSlot = 0;

  const place = (
    node: TreeNode,
    path: string,
    depth: number,
    parentVisible: boolean,
    parentPath: string
  ): number | null => {
    const visible = depth >= topRow;
    const isExpanded = expanded.has(path);
    let lateral: number | null = null;

    const childLaterals: number[] = [];
    if (isExpanded && depth < deepest) {
      for (const child of node.children ?? []) {
        const childLateral = place(
          child, childPath(path, child.label), depth + 1, visible, path
        );
        if (childLateral !== null) childLaterals.push(childLateral);
      }
    }

    if (!visible) return null;
    lateral = childLaterals.length
      ? (childLaterals[0]! + childLaterals[childLaterals.length - 1]!) / 2
      : nextSlot++;
    layouts.push({
      node,
      path,
      parentPath: parentVisible ? parentPath : null,
      depth,
      lateral,
      hasChildren: (node.children ?? []).length > 0,
      isExpanded,
    });
    return lateral;
  };

  place(root, root.label, 0, false, "");
  return layouts;
}
