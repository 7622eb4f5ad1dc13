import hashlib
import re
import xml.etree.ElementTree as ET

import pytest

from affine_annex import render
from affine_annex.annex import annex
from affine_annex.bruhat import shadow
from affine_annex.coxeter_core import Hyperplane, enumerate_by_length, get_context, word_of
from affine_annex.galleries import parse_decorated

from conftest import elt

SVG = "{http://www.w3.org/2000/svg}"
# sha256 prefix of the A2~ annex picture for 021020
SNAPSHOT = "94d43d3222ce9b24"


def test_empty_scene_is_tiling_only(plane_ctx):
    text = render.render_svg(plane_ctx, render.Scene(plane_ctx.tag, radius=3))
    root = ET.fromstring(text.encode())
    assert root.tag == SVG + "svg" and root.get("version") == "1.1"
    assert render.shaded_words(text) == set()
    tiling = [g for g in root.iter(SVG + "g") if g.get("class") == "tiling"][0]
    assert len(list(tiling)) == len(enumerate_by_length(plane_ctx, 3))


def test_shadow_scene(a2):
    w = elt(a2, "01")
    text = render.render_svg(a2, render.shadow_scene(a2, w, shadow(a2, w)))
    assert render.shaded_words(text) == {"", "0", "1", "01"}


def test_deterministic_and_fixed_precision(plane_ctx):
    w = elt(plane_ctx, "0120")
    scene = render.annex_scene(plane_ctx, annex(plane_ctx, w), labels=True)
    scene.add(render.HyperplaneStroke(Hyperplane(plane_ctx.positive_roots[-1], 1)))
    scene.add(render.GalleryPath(parse_decorated(plane_ctx, "01~20")))
    a, b = render.render_svg(plane_ctx, scene), render.render_svg(plane_ctx, scene)
    assert a == b
    body = a.split("?>", 1)[1].replace('version="1.1"', "")
    nums = re.findall(r"-?\d+\.\d+", body)
    assert nums and all(len(n.split(".")[1]) == 6 for n in nums)


def test_annex_scene_shades_exactly_the_annex(a2):
    A = annex(a2, elt(a2, "021020"))
    text = render.render_svg(a2, render.annex_scene(a2, A))
    assert render.shaded_words(text) == {word_of(a2, y) for y in A.members}
    # snapshot of the reference picture
    assert hashlib.sha256(text.encode()).hexdigest()[:16] == SNAPSHOT


def test_folded_gallery_doubles_back(a2):
    g = parse_decorated(a2, "01~2")
    scene = render.Scene("A2~", radius=4).add(render.GalleryPath(g))
    root = ET.fromstring(render.render_svg(a2, scene).encode())
    line = [e for e in root.iter(SVG + "polyline") if e.get("class") == "gallery"][0]
    pts = line.get("points").split()
    # 3 steps, one folded: start + 1 + 2 (out and back) + 1
    assert len(pts) == 5
    assert pts[2] != pts[1] and pts[3] == pts[1]
    assert line.get("marker-end") == "url(#arrow)"


def test_adjacent_alcoves_share_an_edge(plane_ctx):
    canvas = render._Canvas(plane_ctx, render.Scene(plane_ctx.tag))
    for w in enumerate_by_length(plane_ctx, 3):
        for i in plane_ctx.generators:
            p = {(round(x, 6), round(y, 6)) for x, y in canvas.polygon(w)}
            q = {(round(x, 6), round(y, 6)) for x, y in canvas.polygon(plane_ctx.rmul_gen(w, i))}
            assert len(p & q) == 2


def test_a1_strip():
    ctx = get_context("A1~")
    A = annex(ctx, elt(ctx, "010"))
    scene = render.annex_scene(ctx, A)
    scene.add(render.HyperplaneStroke(Hyperplane((1,), 1)))
    text = render.render_svg(ctx, scene)
    assert "<polygon" not in text and "<rect" in text
    assert render.shaded_words(text) == {word_of(ctx, y) for y in A.members}


def test_unknown_layer(a2):
    with pytest.raises(TypeError):
        render.render_svg(a2, render.Scene("A2~", radius=1, layers=[object()]))
