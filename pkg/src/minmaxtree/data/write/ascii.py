from minmaxtree.data.types import MinMaxTree

INDENT = "  "


def render_ascii(t: MinMaxTree) -> str:
    """Render a tree as indented text, one node per line.

    The root comes first, then each subtree in left then right order.
    Every line reads "pos:entry [kind]", indented by depth.

    Parameters
    ----------
    t : MinMaxTree
        The tree.

    Returns
    -------
    str
        The rendering.

    """
    lines = []
    stack = [t.root]
    while stack:
        i = stack.pop()
        kind = t.kinds[i - 1]
        lines.append(f"{INDENT * t.depths[i - 1]}{i}:{t.entry(i)} [{kind.value}]")
        # Right is pushed first so the left subtree prints first
        for child in (t.rights[i - 1], t.lefts[i - 1]):
            if child:
                stack.append(child)
    return "\n".join(lines) + "\n"
