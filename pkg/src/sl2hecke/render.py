"""Renderers for the gluing graph: ASCII, DOT, SVG and JSON."""
from __future__ import annotations

import io
import json
from importlib import resources

from .quotient import GluingGraph, xi_model

POINT_LABEL = {"O": "O", "inf": "∞"}


def _char_label(j: int) -> str:
    return f"id^{j}"


def load_schema() -> dict:
    return json.loads(resources.files("sl2hecke").joinpath("quotient.schema.json").read_text())


# JSON ----------------------------------------------------------------------------

def graph_to_dict(graph: GluingGraph) -> dict:
    return {
        "p": graph.p,
        "g": graph.g,
        "lines": [
            {
                "r": ln.r,
                "class": list(ln.chars),
                "kind": ln.kind,
                "marked": {pt: list(js) for pt, js in sorted(ln.marked.items())},
            }
            for ln in graph.lines
        ],
        "glue_edges": [
            {"line": r1, "point": a, "to_line": r2, "to_point": b} for r1, a, r2, b in graph.glue_edges
        ],
        "components": [list(c) for c in graph.components],
    }


def render_json(graph: GluingGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2, ensure_ascii=False)


# ASCII ---------------------------------------------------------------------------

def render_ascii(graph: GluingGraph) -> str:
    p = graph.p
    xm = xi_model(p)
    out = [f"quotient space for p={p}  g={graph.g}", ""]
    out.append(f"Xi     : {xm['affine_lines']} affine lines + {xm['crossing_pairs']} crossing-line pairs")
    out.append(f"Xi'    : {xm['normalisation_lines']} affine lines t_j, j = 0..{p - 2}")
    out.append(f"Xi'/R' : {len(graph.lines)} projective lines")
    for ln in graph.lines:
        cls = ", ".join(_char_label(j) for j in ln.chars)
        marks = "  ".join(f"{POINT_LABEL[pt]}<-{{{', '.join(_char_label(j) for j in js)}}}"
                          for pt, js in sorted(ln.marked.items()))
        out.append(f"  P{ln.r:<3} {{{cls}}}  {ln.kind:<9} {marks}")
    out.append("Xi/R   : glue edges")
    for r1, a, r2, b in graph.glue_edges:
        out.append(f"  {POINT_LABEL[a]}_{r1} ~ {POINT_LABEL[b]}_{r2}")
    out.append("components")
    for comp in graph.components:
        out.append("  " + " - ".join(f"P{r}" for r in comp))
    return "\n".join(out) + "\n"


# DOT -----------------------------------------------------------------------------

def render_dot(graph: GluingGraph) -> str:
    out = [f"graph quotient_p{graph.p} {{", "  node [shape=record];"]
    for ln in graph.lines:
        cls = ",".join(str(j) for j in ln.chars)
        out.append(f'  P{ln.r} [label="<O> O|P{ln.r} \\{{{cls}\\}}|<inf> ∞"];')
    for r1, a, r2, b in graph.glue_edges:
        out.append(f"  P{r1}:{a} -- P{r2}:{b};")
    out.append("}")
    return "\n".join(out) + "\n"


# SVG -----------------------------------------------------------------------------

def _draw_lines_row(ax, y, labels, width, color):
    n = len(labels)
    for k, lab in enumerate(labels):
        x = (k + 0.5) * width / n
        ax.plot([x - 0.35, x + 0.35], [y - 0.3, y + 0.3], color=color, lw=1.2)
        ax.text(x, y - 0.55, lab, ha="center", va="top", fontsize=7)


def render_svg(graph: GluingGraph) -> str:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Circle

    matplotlib.rcParams["svg.hashsalt"] = "sl2hecke"
    p = graph.p
    n = p - 1
    width = max(n, 2 * max(len(c) for c in graph.components)) + 1
    fig, ax = plt.subplots(figsize=(width * 0.7, 8))
    ax.set_xlim(0, width)
    ax.set_ylim(-1.5, 12)
    ax.set_aspect("equal")
    ax.axis("off")

    # Xi: two lines plus crossing pairs
    y = 10.5
    ax.text(0, y + 1, "Xi", fontsize=9, weight="bold")
    singles = [j for j in range(n) if (2 * j) % n == 0]
    pairs = [j for j in range(1, n // 2) if (2 * j) % n]
    slots = len(singles) + len(pairs)
    for k, j in enumerate(singles):
        x = (k + 0.5) * width / slots
        ax.plot([x, x], [y - 0.4, y + 0.4], color="black", lw=1.2)
        ax.text(x, y - 0.6, _char_label(j), ha="center", va="top", fontsize=7)
    for k, j in enumerate(pairs, start=len(singles)):
        x = (k + 0.5) * width / slots
        ax.plot([x - 0.3, x + 0.3], [y - 0.4, y + 0.4], color="black", lw=1.2)
        ax.plot([x - 0.3, x + 0.3], [y + 0.4, y - 0.4], color="black", lw=1.2)
        ax.text(x, y - 0.6, f"{_char_label(j)}, {_char_label(n - j)}", ha="center", va="top", fontsize=6)

    # Xi': one affine line per character
    y = 7.5
    ax.text(0, y + 1, "Xi'", fontsize=9, weight="bold")
    _draw_lines_row(ax, y, [_char_label(j) for j in range(n)], width, "black")

    # Xi'/R': one projective line per class
    y = 4.5
    ax.text(0, y + 1, "Xi'/R'", fontsize=9, weight="bold")
    m = len(graph.lines)
    for k, ln in enumerate(graph.lines):
        x = (k + 0.5) * width / m
        ax.add_patch(Circle((x, y), 0.4, fill=False, lw=1.2))
        ax.text(x, y, f"P{ln.r}", ha="center", va="center", fontsize=7)

    # Xi/R: chains, tangent circles for glued lines, one row per component
    ax.text(0, 2.0, "Xi/R", fontsize=9, weight="bold")
    for row, comp in enumerate(graph.components):
        order = _chain_order(graph, comp)
        yy = 1.0 - 1.1 * row
        for k, r in enumerate(order):
            x = 1.0 + 0.8 * k
            ax.add_patch(Circle((x, yy), 0.4, fill=False, lw=1.2, color="tab:blue" if row == 0 else "tab:red"))
            ax.text(x, yy, f"P{r}", ha="center", va="center", fontsize=6)

    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def _chain_order(graph: GluingGraph, comp: list[int]) -> list[int]:
    """Walk a path component from an endpoint."""
    adj: dict[int, list[int]] = {r: [] for r in comp}
    for r1, _, r2, _ in graph.glue_edges:
        if r1 in adj:
            adj[r1].append(r2)
            adj[r2].append(r1)
    start = min(r for r in comp if len(adj[r]) <= 1)
    order, prev = [start], None
    while True:
        nxt = [r for r in adj[order[-1]] if r != prev]
        if not nxt:
            return order
        prev = order[-1]
        order.append(nxt[0])


RENDERERS = {"ascii": render_ascii, "dot": render_dot, "svg": render_svg, "json": render_json}


def render(graph: GluingGraph, fmt: str) -> str:
    if fmt not in RENDERERS:
        raise ValueError(f"unknown format {fmt!r}")
    return RENDERERS[fmt](graph)
