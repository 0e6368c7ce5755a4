"""Minimal deterministic SVG renderers: line plots for (x, series...) tables
and heat strips for (x, y, value) grids. No external plotting dependency."""

import math

_MARGIN = 50
_WIDTH = 640
_HEIGHT = 420

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#17becf", "#7f7f7f"]


def _fmt(v):
    return f"{v:.2f}"


def _ticks(lo, hi, n=5):
    if hi == lo:
        hi = lo + 1.0
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def line_plot_svg(header, columns, title=""):
    """SVG line plot: first column is x, the rest are series.

    `columns` is a list of float lists, one per header entry.
    """
    x = columns[0]
    series = columns[1:]
    names = header[1:]
    xs = [v for v in x if math.isfinite(v)]
    ys = [v for col in series for v in col if math.isfinite(v)]
    if not xs or not ys:
        raise ValueError("nothing to plot")
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pw = _WIDTH - 2 * _MARGIN
    ph = _HEIGHT - 2 * _MARGIN

    def px(v):
        return _MARGIN + pw * (v - x_lo) / (x_hi - x_lo)

    def py(v):
        return _HEIGHT - _MARGIN - ph * (v - y_lo) / (y_hi - y_lo)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}">',
             f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
             f'<text x="{_WIDTH / 2:.0f}" y="20" text-anchor="middle" '
             f'font-family="monospace" font-size="14">{title}</text>']
    # axes
    parts.append(f'<line x1="{_MARGIN}" y1="{_HEIGHT - _MARGIN}" x2="{_WIDTH - _MARGIN}" '
                 f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>')
    parts.append(f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
                 f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>')
    for t in _ticks(x_lo, x_hi):
        parts.append(f'<text x="{px(t):.1f}" y="{_HEIGHT - _MARGIN + 16}" '
                     f'text-anchor="middle" font-family="monospace" font-size="10">{_fmt(t)}</text>')
    for t in _ticks(y_lo, y_hi):
        parts.append(f'<text x="{_MARGIN - 6}" y="{py(t) + 3:.1f}" text-anchor="end" '
                     f'font-family="monospace" font-size="10">{_fmt(t)}</text>')
    for si, (name, col) in enumerate(zip(names, series)):
        color = _PALETTE[si % len(_PALETTE)]
        pts = " ".join(f"{px(a):.1f},{py(b):.1f}" for a, b in zip(x, col)
                       if math.isfinite(a) and math.isfinite(b))
        parts.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                     f'points="{pts}"/>')
        parts.append(f'<text x="{_WIDTH - _MARGIN - 4}" y="{_MARGIN + 14 * (si + 1)}" '
                     f'text-anchor="end" font-family="monospace" font-size="11" '
                     f'fill="{color}">{name}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _heat_color(t):
    # blue -> green -> yellow ramp
    t = min(max(t, 0.0), 1.0)
    if t < 0.5:
        u = t / 0.5
        r, g, b = 0, int(160 * u), int(180 * (1 - u) + 60)
    else:
        u = (t - 0.5) / 0.5
        r, g, b = int(240 * u), int(160 + 80 * u), 60
    return f"#{r:02x}{g:02x}{b:02x}"


def heat_map_svg(x_col, y_col, values, title=""):
    """SVG heat map for (x, y, value) triplets on a rectangular lattice."""
    xs = sorted(set(x_col))
    ys = sorted(set(y_col))
    nx, ny = len(xs), len(ys)
    if nx < 2 or ny < 2:
        raise ValueError("heat map needs at least a 2x2 grid")
    lo = min(values)
    hi = max(values)
    span = hi - lo if hi > lo else 1.0
    size = 512
    cw = size / nx
    ch = size / ny
    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: i for i, v in enumerate(ys)}
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 30}">',
             f'<text x="{size / 2:.0f}" y="18" text-anchor="middle" '
             f'font-family="monospace" font-size="13">{title}</text>']
    for a, b, v in zip(x_col, y_col, values):
        color = _heat_color((v - lo) / span)
        parts.append(f'<rect x="{xi[a] * cw:.1f}" y="{30 + (ny - 1 - yi[b]) * ch:.1f}" '
                     f'width="{cw + 0.5:.1f}" height="{ch + 0.5:.1f}" fill="{color}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
