from minmaxtree.data.types import MinMaxTree, NodeKind

NODE_SHAPES = {
    NodeKind.LEAF: "plaintext",
    NodeKind.MIN_ROOT: "circle",
    NodeKind.MAX_ROOT: "doublecircle",
}


def export_dot(t: MinMaxTree) -> str:
    """Write a tree as a Graphviz digraph.

    Nodes are emitted in position order, each labeled "pos:entry" and
    carrying its kind as the class attribute. Edges follow, also in
    position order, labeled "l" or "r".

    Parameters
    ----------
    t : MinMaxTree
        The tree.

    Returns
    -------
    str
        The DOT text, identical for identical trees.

    """
    lines = [f'digraph "{t.variant.value}" {{', "  node [fontname=monospace];"]
    for i in t.positions():
        kind = t.kinds[i - 1]
        label = f"{i}:{t.entry(i)}"
        lines.append(
            f'  n{i} [label="{label}", shape={NODE_SHAPES[kind]}, '
            f'class="{kind.value}"];'
        )

    for i in t.positions():
        for child, side in ((t.lefts[i - 1], "l"), (t.rights[i - 1], "r")):
            if child:
                lines.append(f'  n{i} -> n{child} [label="{side}"];')

    lines.append("}")
    return "\n".join(lines) + "\n"
