import pytest

from affine_annex.annex import (
    PreconditionError, annex, annex_max_length, annex_naive, annex_product, check_boundary_types,
    check_product_law, check_w0_stability, reflection_closure_check)
from affine_annex.bruhat import leq, shadow
from affine_annex.coxeter_core import (
    enumerate_by_length, finite_weyl_group, get_context, parabolic_elements, right_descents)

from conftest import elt

# Frozen from the naive complement-of-upper-set enumeration below.
ANNEX_SIZES_A2 = {"021020": 102, "0210201": 144, "0120102": 144, "0": 6}


def test_annex_of_s0_is_finite_parabolic(a2):
    A = annex(a2, elt(a2, "0"))
    assert A.members == frozenset(parabolic_elements(a2, [1, 2]))
    assert {i for _, i in A.boundary} == {0}


def test_annex_of_identity_empty(a2):
    A = annex(a2, a2.identity)
    assert A.members == frozenset() and A.boundary == frozenset()


@pytest.mark.parametrize("word,size", sorted(ANNEX_SIZES_A2.items()))
def test_annex_sizes(a2, word, size):
    A = annex(a2, elt(a2, word))
    assert len(A.members) == size
    # no member escapes the BFS: check two shells past the longest member
    pool = enumerate_by_length(a2, annex_max_length(a2, A) + 2)
    assert annex_naive(a2, A.owner, pool) == set(A.members)


def test_boundary_definition(plane_ctx):
    for w in enumerate_by_length(plane_ctx, 4)[1:]:
        A = annex(plane_ctx, w)
        for y in A.members:
            for i in plane_ctx.generators:
                assert ((y, i) in A.boundary) == (plane_ctx.rmul_gen(y, i) not in A.members)
        assert check_boundary_types(plane_ctx, w, A)


def test_monotone_in_owner(plane_ctx):
    els = enumerate_by_length(plane_ctx, 4)
    annexes = {w: annex(plane_ctx, w).members for w in els}
    for w in els:
        for v in shadow(plane_ctx, w):
            assert annexes[v] <= annexes[w]


def test_annex_is_lower_set(plane_ctx):
    for w in enumerate_by_length(plane_ctx, 4):
        A = annex(plane_ctx, w)
        for y in A.members:
            assert shadow(plane_ctx, y) <= A.members
            assert not leq(plane_ctx, w, y)


def test_product_law_example(a2):
    # 021020 * s_1 has the single right descent 1, so equality is required
    assert check_product_law(a2, elt(a2, "021020"), 1) == (True, True, True)


def test_product_preconditions(a2):
    with pytest.raises(PreconditionError):
        annex_product(a2, a2.identity, 1)
    with pytest.raises(PreconditionError):
        annex_product(a2, elt(a2, "021020"), 0)


def test_w0_stability_example(a2):
    w = elt(a2, "0120102")
    assert check_w0_stability(a2, w)
    with pytest.raises(PreconditionError):
        check_w0_stability(a2, elt(a2, "1"))


def test_not_w0_stable_outside_chamber(a2):
    # sanity: the check can fail
    w = elt(a2, "10")
    A = annex(a2, w)
    W0 = finite_weyl_group(a2)
    assert not all(a2.mul(v, z) in A.members for v in W0 for z in A.members)


def test_reflection_closure(plane_ctx):
    for w in enumerate_by_length(plane_ctx, 4):
        assert reflection_closure_check(plane_ctx, w)


def test_boundary_types_are_descents_a1():
    ctx = get_context("A1~")
    for w in enumerate_by_length(ctx, 5)[1:]:
        A = annex(ctx, w)
        assert {i for _, i in A.boundary} <= right_descents(ctx, w)
        # everything shorter than w, plus the other element of its length
        assert len(A.members) == 2 * ctx.length(w)
