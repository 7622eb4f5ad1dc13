"""Deterministic SVG pictures of the alcove tilings.

All geometry stays exact until emission: coroot coordinates are mapped to the
plane through the Cholesky factor of the symmetric form, and every number is
written with six decimals. Rank-one types are drawn as a strip of unit cells.
"""
import math
from dataclasses import dataclass, field
from typing import List, Optional

from .coxeter_core import enumerate_by_length, word_of
from .galleries import Gallery, alcoves

UNIT = 60.0  # pixels per unit of the coroot lattice scale
MARGIN = 10.0
ANNEX_FILL = "#f7e35a"
SHADOW_FILL = "#9fc5e8"
GALLERY_STROKE = "#333333"
HYPERPLANE_STROKE = "#c0392b"
GRID_STROKE = "#bbbbbb"
STRIP_HEIGHT = 40.0


@dataclass
class AlcoveFill:
    elements: frozenset
    color: str = ANNEX_FILL
    css_class: str = "fill"


@dataclass
class HyperplaneStroke:
    hyperplane: object
    color: str = HYPERPLANE_STROKE
    width: float = 2.0


@dataclass
class GalleryPath:
    gallery: Gallery
    color: str = GALLERY_STROKE
    width: float = 2.0


@dataclass
class Scene:
    tag: str
    radius: int = 8  # background shows every alcove of length <= radius
    layers: List[object] = field(default_factory=list)
    labels: bool = False
    unit: float = UNIT

    def add(self, layer):
        self.layers.append(layer)
        return self


def _fmt(v):
    s = "%.6f" % v
    return "0.000000" if s == "-0.000000" else s


def _embedding(ctx, unit):
    """Cartesian images of the simple coroots, scaled to pixels."""
    B = ctx.rs.sym_form
    r = ctx.rank
    if r == 1:
        return [(unit, 0.0)]
    a11, a12, a22 = float(B[0][0]), float(B[0][1]), float(B[1][1])
    l11 = math.sqrt(a11)
    l21 = a12 / l11
    l22 = math.sqrt(a22 - l21 * l21)
    roots = [(l11, 0.0), (l21, l22)]
    out = []
    for k, (x, y) in enumerate(roots):
        c = 2.0 / float(B[k][k])
        # normalise so the shortest coroot is one unit long
        out.append((x * c, y * c))
    shortest = min(math.hypot(x, y) for x, y in out)
    return [(unit * x / shortest, unit * y / shortest) for x, y in out]


class _Canvas:
    def __init__(self, ctx, scene):
        self.ctx = ctx
        self.basis = _embedding(ctx, scene.unit)

    def point(self, p):
        """Exact coroot coordinates -> (x, y) floats, y pointing down."""
        if self.ctx.rank == 1:
            return (float(p[0]) * self.basis[0][0], 0.0)
        x = sum(float(p[k]) * self.basis[k][0] for k in range(2))
        y = sum(float(p[k]) * self.basis[k][1] for k in range(2))
        return (x, -y)

    def polygon(self, a):
        return [self.point(v) for v in self.ctx.vertices(a)]

    def centre(self, a):
        pts = self.polygon(a)
        return (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))

    def panel_midpoint(self, a, j):
        pts = [p for k, p in enumerate(self.polygon(a)) if k != j]
        return (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))


def _points_attr(pts):
    return " ".join("%s,%s" % (_fmt(x), _fmt(y)) for x, y in pts)


def _strip_rect(canvas, a):
    xs = sorted(p[0] for p in canvas.polygon(a))
    return xs[0], xs[-1]


def render_svg(ctx, scene):
    """SVG 1.1 document for ``scene``; identical scenes give identical bytes."""
    canvas = _Canvas(ctx, scene)
    strip = ctx.rank == 1
    background = enumerate_by_length(ctx, scene.radius)
    if strip:
        spans = [_strip_rect(canvas, a) for a in background]
        xmin, xmax = min(s[0] for s in spans), max(s[1] for s in spans)
        ymin, ymax = -STRIP_HEIGHT / 2, STRIP_HEIGHT / 2
    else:
        pts = [p for a in background for p in canvas.polygon(a)]
        xmin, xmax = min(p[0] for p in pts), max(p[0] for p in pts)
        ymin, ymax = min(p[1] for p in pts), max(p[1] for p in pts)
    xmin, ymin, xmax, ymax = xmin - MARGIN, ymin - MARGIN, xmax + MARGIN, ymax + MARGIN
    width, height = xmax - xmin, ymax - ymin

    def cell(a, attrs):
        if strip:
            lo, hi = _strip_rect(canvas, a)
            return '<rect x="%s" y="%s" width="%s" height="%s" %s/>' % (
                _fmt(lo), _fmt(-STRIP_HEIGHT / 2), _fmt(hi - lo), _fmt(STRIP_HEIGHT), attrs)
        return '<polygon points="%s" %s/>' % (_points_attr(canvas.polygon(a)), attrs)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%s" height="%s" '
        'viewBox="%s %s %s %s">' % (_fmt(width), _fmt(height), _fmt(xmin), _fmt(ymin),
                                    _fmt(width), _fmt(height)),
        '<defs>',
        '<clipPath id="view"><rect x="%s" y="%s" width="%s" height="%s"/></clipPath>' % (
            _fmt(xmin), _fmt(ymin), _fmt(width), _fmt(height)),
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="context-stroke"/></marker>',
        '</defs>',
        '<rect x="%s" y="%s" width="%s" height="%s" fill="#ffffff"/>' % (
            _fmt(xmin), _fmt(ymin), _fmt(width), _fmt(height)),
        '<g clip-path="url(#view)">',
        '<g class="tiling" fill="none" stroke="%s" stroke-width="1">' % GRID_STROKE,
    ]
    for a in background:
        out.append(cell(a, 'data-word="%s"' % word_of(ctx, a)))
    out.append('</g>')
    identity = cell(ctx.identity, 'fill="none" stroke="#000000" stroke-width="2"')
    out.append('<g class="identity">%s</g>' % identity)

    for n, layer in enumerate(scene.layers):
        if isinstance(layer, AlcoveFill):
            out.append('<g class="%s" id="layer%d" fill="%s" stroke="%s" stroke-width="1">'
                       % (layer.css_class, n, layer.color, GRID_STROKE))
            for word, a in sorted((word_of(ctx, a), a) for a in layer.elements):
                out.append(cell(a, 'data-word="%s"' % word))
            out.append('</g>')
        elif isinstance(layer, HyperplaneStroke):
            out.append(_hyperplane_line(ctx, canvas, layer, n, (xmin, ymin, xmax, ymax), strip))
        elif isinstance(layer, GalleryPath):
            out.append(_gallery_path(ctx, canvas, layer, n))
        else:
            raise TypeError("unknown layer %r" % (layer,))

    if scene.labels:
        out.append('<g class="labels" font-family="sans-serif" font-size="%s" '
                   'text-anchor="middle" dominant-baseline="middle">' % _fmt(scene.unit / 6))
        shown = set()
        for layer in scene.layers:
            if isinstance(layer, AlcoveFill):
                shown |= set(layer.elements)
        for word, a in sorted((word_of(ctx, a), a) for a in shown):
            x, y = canvas.centre(a)
            out.append('<text x="%s" y="%s">%s</text>' % (_fmt(x), _fmt(y), word or "e"))
        out.append('</g>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def _hyperplane_line(ctx, canvas, layer, n, box, strip):
    H = layer.hyperplane
    attrs = 'class="hyperplane" id="layer%d" stroke="%s" stroke-width="%s"' % (
        n, layer.color, _fmt(layer.width))
    gv = ctx.rs.coroot(H.direction)
    if strip:
        x, _ = canvas.point(tuple(H.level * c / 2 for c in gv))
        return '<line x1="%s" y1="%s" x2="%s" y2="%s" %s/>' % (
            _fmt(x), _fmt(box[1]), _fmt(x), _fmt(box[3]), attrs)
    f = ctx.rs.root_functional(H.direction)
    p0 = tuple(H.level * c / 2 for c in gv)  # <gamma^vee, gamma> = 2
    x0, y0 = canvas.point(p0)
    x1, y1 = canvas.point((p0[0] + f[1], p0[1] - f[0]))
    dx, dy = x1 - x0, y1 - y0
    norm = math.hypot(dx, dy)
    reach = math.hypot(box[2] - box[0], box[3] - box[1]) + math.hypot(x0, y0)
    dx, dy = dx / norm * reach, dy / norm * reach
    return '<line x1="%s" y1="%s" x2="%s" y2="%s" %s/>' % (
        _fmt(x0 - dx), _fmt(y0 - dy), _fmt(x0 + dx), _fmt(y0 + dy), attrs)


def _gallery_path(ctx, canvas, layer, n):
    """Polyline through alcove centres; a folded step touches the panel and comes back."""
    g = layer.gallery
    seq = alcoves(ctx, g)
    pts = [canvas.centre(seq[0])]
    for t, (j, folded) in enumerate(g.steps):
        here = seq[t]
        if folded:
            pts.append(canvas.panel_midpoint(here, j))
            pts.append(canvas.centre(here))
        else:
            pts.append(canvas.centre(seq[t + 1]))
    return ('<polyline class="gallery" id="layer%d" points="%s" fill="none" stroke="%s" '
            'stroke-width="%s" marker-end="url(#arrow)"/>' % (
                n, _points_attr(pts), layer.color, _fmt(layer.width)))


def shaded_words(svg_text, css_class="fill"):
    """Words of the alcoves filled by layers of ``css_class`` in a rendered document."""
    words = set()
    inside = False
    for line in svg_text.splitlines():
        if line.startswith('<g class="%s"' % css_class):
            inside = True
        elif line.startswith("</g>"):
            inside = False
        elif inside and 'data-word="' in line:
            words.add(line.split('data-word="', 1)[1].split('"', 1)[0])
    return words


def annex_scene(ctx, A, radius: Optional[int] = None, labels=False):
    """Annex in yellow over a tiling large enough to hold it."""
    from .annex import annex_max_length

    if radius is None:
        radius = annex_max_length(ctx, A) + 2
    scene = Scene(ctx.tag, radius=radius, labels=labels)
    scene.add(AlcoveFill(A.members, ANNEX_FILL))
    if A.owner != ctx.identity:
        scene.add(AlcoveFill(frozenset([A.owner]), "#7f7f7f", css_class="owner"))
    return scene


def shadow_scene(ctx, w, members, radius=None, labels=False):
    if radius is None:
        radius = ctx.length(w) + 2
    scene = Scene(ctx.tag, radius=radius, labels=labels)
    return scene.add(AlcoveFill(frozenset(members), SHADOW_FILL, css_class="fill"))
