import pytest
from hypothesis import given, settings, strategies as st

from affine_annex.bruhat import CapExceededError, shadow
from affine_annex.coxeter_core import (
    enumerate_by_length, get_context, reduced_word, reduced_words, separating_walls)
from affine_annex.galleries import (
    alcoves, crossing_count, decorated, end_alcove, fold_by_reflection, footprint,
    gallery_from_word, multifold, parse_decorated, shadow_via_foldings, translate)

from conftest import elt


def test_decorated_roundtrip(a2):
    g = parse_decorated(a2, "01~20~")
    assert g.type_word == [0, 1, 2, 0]
    assert g.fold_set == {2, 4}
    assert decorated(g) == "01~20~"
    assert end_alcove(a2, g) == elt(a2, "02")
    for bad in ("~0", "0~~", "03"):
        with pytest.raises(ValueError):
            parse_decorated(a2, bad)


def test_folded_step_stays(a2):
    g = parse_decorated(a2, "0~")
    assert alcoves(a2, g) == [a2.identity, a2.identity]


def test_multifold_bounds(a2):
    g = gallery_from_word(a2, a2.identity, [0, 1])
    with pytest.raises(IndexError):
        multifold(a2, g, {3})


reduced = st.sampled_from(["A2~", "C2~", "G2~"]).flatmap(
    lambda tag: st.sampled_from(enumerate_by_length(get_context(tag), 7)).map(lambda w: (tag, w)))


@settings(max_examples=100, deadline=None)
@given(tw=reduced, data=st.data())
def test_geometric_fold_matches_decorated(tw, data):
    tag, w = tw
    ctx = get_context(tag)
    word = reduced_word(ctx, w)
    if not word:
        return
    start = data.draw(st.sampled_from(enumerate_by_length(ctx, 3)))
    g = gallery_from_word(ctx, start, word)
    t = data.draw(st.integers(1, len(word)))
    assert alcoves(ctx, multifold(ctx, g, {t})) == fold_by_reflection(ctx, g, t)


@settings(max_examples=100, deadline=None)
@given(tw=reduced, data=st.data())
def test_multifold_algebra(tw, data):
    tag, w = tw
    ctx = get_context(tag)
    g = gallery_from_word(ctx, ctx.identity, reduced_word(ctx, w))
    idx = st.frozensets(st.integers(1, max(len(g), 1)), max_size=len(g)) if len(g) else st.just(frozenset())
    J1, J2 = data.draw(idx), data.draw(idx)
    assert multifold(ctx, multifold(ctx, g, J1), J2) == multifold(ctx, multifold(ctx, g, J2), J1)
    assert multifold(ctx, multifold(ctx, g, J1), J1) == g
    h = multifold(ctx, g, J1)
    assert end_alcove(ctx, h) == end_alcove(ctx, footprint(ctx, h))
    x = data.draw(st.sampled_from(enumerate_by_length(ctx, 3)))
    assert end_alcove(ctx, translate(ctx, x, h)) == ctx.mul(x, end_alcove(ctx, h))


def test_shadow_via_foldings_matches(plane_ctx):
    for w in enumerate_by_length(plane_ctx, 6):
        assert shadow_via_foldings(plane_ctx, w) == shadow(plane_ctx, w)


def test_braid_invariance(a2):
    w = elt(a2, "0120102")
    results = {frozenset(shadow_via_foldings(a2, w, word=u)) for u in reduced_words(a2, w)}
    assert len(results) == 1


def test_folding_cap(a2):
    with pytest.raises(CapExceededError):
        shadow_via_foldings(a2, elt(a2, "0120"), cap=3)


def test_minimal_gallery_crosses_each_separating_wall_once(plane_ctx):
    for w in enumerate_by_length(plane_ctx, 6)[1:]:
        g = gallery_from_word(plane_ctx, plane_ctx.identity, reduced_word(plane_ctx, w))
        walls = separating_walls(plane_ctx, w)
        assert all(crossing_count(plane_ctx, g, H) == 1 for H in walls)
        assert sum(crossing_count(plane_ctx, g, H) for H in walls) == len(g)
    with pytest.raises(ValueError):
        crossing_count(plane_ctx, parse_decorated(plane_ctx, "0~"), walls[0])
