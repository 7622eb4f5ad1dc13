import random

import pytest
from hypothesis import given, settings, strategies as st

from affine_annex import boundary_theory as bt
from affine_annex.annex import annex
from affine_annex.bruhat import shadow
from affine_annex.coxeter_core import (
    Hyperplane, UnsupportedTypeError, enumerate_by_length, finite_weyl_group, get_context,
    right_descents)

from conftest import elt

A1, A2_ROOT = (1, 0), (0, 1)


def test_halfspace_examples(a2):
    for gamma in a2.positive_roots:
        for k in range(-3, 4):
            H = Hyperplane(gamma, k)
            assert bt.halfspace_side(a2, H, a2.identity) is bt.Side.IDENTITY
            rH = bt.reflection_element(a2, H)
            assert bt.halfspace_side(a2, H, rH) is bt.Side.INFINITY


def test_halfspace_criteria_agree(plane_ctx):
    for x in enumerate_by_length(plane_ctx, 5):
        for gamma in plane_ctx.positive_roots:
            for k in range(-4, 5):
                H = Hyperplane(gamma, k)
                side = bt.halfspace_side(plane_ctx, H, x)
                assert side == bt.halfspace_side_geometric(plane_ctx, H, x)
                # the reflection swaps sides
                flipped = bt.halfspace_side(plane_ctx, H, plane_ctx.mul(bt.reflection_element(plane_ctx, H), x))
                assert flipped != side


def test_reflection_element(plane_ctx):
    theta = plane_ctx.rs.highest_root
    assert bt.reflection_element(plane_ctx, Hyperplane(theta, 1)) == plane_ctx.gens[0]
    assert bt.reflection_element(plane_ctx, Hyperplane(A1, 0)) == plane_ctx.gens[1]
    for gamma in plane_ctx.positive_roots:
        for k in range(-3, 4):
            r = bt.reflection_element(plane_ctx, Hyperplane(gamma, k))
            assert plane_ctx.mul(r, r) == plane_ctx.identity
            assert plane_ctx.hyperplane_of(r) == Hyperplane(gamma, k)


def test_three_parallel_example(a2):
    assert bt.three_parallel_compose(a2, A1, 0) == bt.reflection_element(a2, Hyperplane(A1, 1))


def test_three_parallel_sweep(plane_ctx):
    rng = random.Random(7)
    alcoves = rng.sample(enumerate_by_length(plane_ctx, 6), 20)
    for gamma in plane_ctx.positive_roots:
        for m in range(-2, 3):
            lhs = bt.three_parallel_compose(plane_ctx, gamma, m)
            r2 = bt.reflection_element(plane_ctx, Hyperplane(gamma, m + 1))
            assert lhs == r2
            assert all(plane_ctx.mul(lhs, x) == plane_ctx.mul(r2, x) for x in alcoves)


def test_transport(a2):
    H3 = Hyperplane(A2_ROOT, 0)
    assert bt.transport_hyperplane(a2, Hyperplane(A1, 0), Hyperplane(A1, 0), H3) == H3
    got = bt.transport_hyperplane(a2, Hyperplane(A1, 1), Hyperplane(A1, 0), H3)
    assert got == Hyperplane(A2_ROOT, -1)
    assert got == bt.transport_by_conjugation(a2, Hyperplane(A1, 1), Hyperplane(A1, 0), H3)
    with pytest.raises(ValueError):
        bt.transport_hyperplane(a2, Hyperplane(A1, 1), Hyperplane(A2_ROOT, 0), H3)


@settings(max_examples=200, deadline=None)
@given(tag=st.sampled_from(["A2~", "C2~", "G2~"]), data=st.data())
def test_transport_property(tag, data):
    ctx = get_context(tag)
    roots = ctx.positive_roots
    gamma, alpha = data.draw(st.sampled_from(roots)), data.draw(st.sampled_from(roots))
    n1, n2, m = (data.draw(st.integers(-5, 5)) for _ in range(3))
    r1, r2, H3 = Hyperplane(gamma, n1), Hyperplane(gamma, n2), Hyperplane(alpha, m)
    got = bt.transport_hyperplane(ctx, r2, r1, H3)
    assert got.direction == alpha
    assert got == bt.transport_by_conjugation(ctx, r2, r1, H3)


def test_pm1_hypothesis_error(a2):
    # the identity alcove does not satisfy the +-1 hypotheses for levels 5, 6, 7
    with pytest.raises(bt.HypothesisError):
        bt.check_pm1(a2, A1, 5, a2.identity)


def test_pm1_sweep(plane_ctx):
    r = bt.pm1_sweep(plane_ctx, 5)["pm1"]
    assert r.ok and r.instances > 0


def test_pm1_rejects_a1():
    with pytest.raises(UnsupportedTypeError):
        bt.pm1_sweep(get_context("A1~"), 3)


def _first_dagger(ctx, n):
    return next(inst for inst in bt.dagger_instances(ctx, 6) if inst.seq.n == n)


def test_dagger_rules(a2):
    inst = _first_dagger(a2, 2)
    assert bt.dagger_holds(a2, inst)
    short = inst._replace(seq=inst.seq._replace(n=1))
    assert not bt.dagger_holds(a2, short)
    other = next(i for i in a2.generators if i not in right_descents(a2, inst.w))
    assert not bt.dagger_holds(a2, inst._replace(i=other))


def test_dagger_predictions_on_boundary(plane_ctx):
    r = bt.dagger_sweep(plane_ctx, 5)
    s = r["dagger_implies_annex_boundary"]
    assert s.ok and s.instances > 0


def test_predicted_boundary_s0(a2):
    w = elt(a2, "0")
    found = bt.predicted_boundary(a2, w, 0, 6)
    assert found and found <= annex(a2, w).members
    with pytest.raises(bt.HypothesisError):
        bt.predicted_boundary(a2, w, 1, 6)


def test_predictions_generate_annex_of_chamber_element(a2):
    w = elt(a2, "0120102")
    A = annex(a2, w)
    found = set()
    for i in right_descents(a2, w):
        found |= bt.predicted_boundary(a2, w, i, 10)
    orbit = {a2.mul(v, z) for v in finite_weyl_group(a2) for z in found}
    assert orbit <= A.boundary_alcoves
    below = set()
    for z in orbit:
        below |= shadow(a2, z)
    assert below == set(A.members)


def test_main_theorem_small(plane_ctx):
    r = bt.main_theorem_sweep(plane_ctx, 4)
    assert r.ok and all(s.instances > 0 for s in r.values())


def test_descent_propagation_on_length_three_instance(a2):
    inst = _first_dagger(a2, 3)
    r = bt.verify_descent_propagation(a2, inst)
    assert r.ok
    for name in ("final_element_drops_i", "descent_meet_or_final_panel", "prefix_descent_meet",
                 "identity_halves_nest", "owner_path_increases"):
        assert r[name].instances == 1, name


def test_noncoincidence_gate(a2):
    # find a sequence whose first step lands on w itself: z_1 = u_0
    for w in enumerate_by_length(a2, 4):
        for i in right_descents(a2, w):
            for gamma in a2.positive_roots:
                j = a2.strip(w, gamma)
                seq = bt.ReflectionSequence(gamma, j + 1, 1, 2)
                z, u = bt.trajectory(a2, seq, w, i)
                if z[1] == u[0]:
                    r = bt.verify_descent_propagation(a2, bt.DaggerInstance(seq, w, i))
                    assert r["final_element_drops_i"].skipped == 1
                    assert r["final_element_drops_i"].instances == 0
                    assert not bt.dagger_holds(a2, bt.DaggerInstance(seq, w, i))
                    return
    pytest.fail("no coinciding instance found")


def test_identity_half_nesting():
    g = (1, 0)
    assert bt.identity_half_contained(Hyperplane(g, 1), Hyperplane(g, 3))
    assert not bt.identity_half_contained(Hyperplane(g, 3), Hyperplane(g, 1))
    assert bt.identity_half_contained(Hyperplane(g, 0), Hyperplane(g, -2))
    assert not bt.identity_half_contained(Hyperplane(g, 0), Hyperplane(g, 1))


def test_structural_c2_order_four_excluded():
    ctx = get_context("C2~")
    r = bt.structural_checks(ctx, 6)
    assert r.ok
    s = r["affine_pair_order_not_4"]
    assert s.instances > 0 and s.passed == s.instances


def test_report_dict_shape(a2):
    d = bt.pm1_sweep(a2, 3).as_dict()
    assert set(d["pm1"]) == {"instances", "passed", "skipped", "failures"}
    merged = bt.Report().merge(bt.pm1_sweep(a2, 3)).merge(bt.pm1_sweep(a2, 3))
    assert merged["pm1"].instances == 2 * d["pm1"]["instances"]
