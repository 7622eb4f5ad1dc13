"""Exhaustive and sampled sweeps that back ``verify``.

Each sweep returns a :class:`~affine_annex.boundary_theory.Report`. Only the
sampled parts take a ``rng``; everything else is seed-free.
"""
import random

from . import boundary_theory as bt
from .annex import (
    PreconditionError, annex, annex_max_length, check_boundary_types, check_product_law,
    check_w0_stability, reflection_closure_check)
from .bruhat import leq, shadow, subword_products
from .coxeter_core import (
    Hyperplane, enumerate_by_length, is_fundamental_chamber, reduced_word, reduced_words,
    right_descents, word_of)
from .galleries import shadow_via_foldings


class _SubwordCache:
    """Subword products of the greedy reduced word, one kernel call per element."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.cache = {}

    def below(self, y):
        got = self.cache.get(y)
        if got is None:
            got = self.cache[y] = subword_products(self.ctx, reduced_word(self.ctx, y))
        return got


def bruhat_oracle_sweep(ctx, max_len):
    """``leq`` against the subword oracle on every pair of length at most ``max_len``."""
    report = bt.Report()
    s = report.stmt("leq_matches_subword_oracle")
    elements = enumerate_by_length(ctx, max_len)
    oracle = _SubwordCache(ctx)
    for y in elements:
        below = oracle.below(y)
        for x in elements:
            s.record(leq(ctx, x, y) == (x in below), [word_of(ctx, x), word_of(ctx, y)])
    return report


def shadow_sweep(ctx, max_len, samples=20, rng=None):
    """Foldings of a minimal gallery against the lower Bruhat interval.

    The exhaustive part uses the greedy reduced word; the sampled part picks
    ``samples`` elements with at least two reduced words and compares two of them.
    """
    rng = rng if rng is not None else random.Random(0)
    report = bt.Report()
    s = report.stmt("foldings_match_lower_interval")
    for w in enumerate_by_length(ctx, max_len):
        s.record(shadow_via_foldings(ctx, w) == shadow(ctx, w), [word_of(ctx, w)])
    t = report.stmt("foldings_independent_of_reduced_word")
    pool = [w for w in enumerate_by_length(ctx, max_len) if len(reduced_words(ctx, w, 2)) > 1]
    for w in rng.sample(pool, min(samples, len(pool))):
        words = reduced_words(ctx, w)
        a, b = rng.sample(words, 2)
        lower = shadow(ctx, w)
        t.record(shadow_via_foldings(ctx, w, word=a) == lower == shadow_via_foldings(ctx, w, word=b),
                 [word_of(ctx, w)])
    return report


def annex_finiteness_sweep(ctx, max_len):
    """Annex BFS terminates and agrees with the subword oracle one step past its reach."""
    report = bt.Report()
    fin = report.stmt("annex_bfs_terminates")
    agree = report.stmt("annex_matches_subword_oracle")
    oracle = _SubwordCache(ctx)
    shells = {}
    for w in enumerate_by_length(ctx, max_len):
        key = [word_of(ctx, w)]
        A = annex(ctx, w)  # raises AnnexCapError on a runaway search
        fin.record(True, key)
        reach = annex_max_length(ctx, A) + 1
        if reach not in shells:
            shells[reach] = enumerate_by_length(ctx, reach)
        agree.record(all((y in A.members) == (w not in oracle.below(y)) for y in shells[reach]),
                     key)
    return report


def boundary_types_sweep(ctx, max_len):
    report = bt.Report()
    s = report.stmt("boundary_types_are_descents")
    for w in enumerate_by_length(ctx, max_len):
        s.record(check_boundary_types(ctx, w), [word_of(ctx, w)])
    return report


def product_law_sweep(ctx, max_len):
    report = bt.Report()
    inc = report.stmt("product_contains_annex_of_ws_k")
    eq = report.stmt("product_equals_when_single_descent")
    for w in enumerate_by_length(ctx, max_len):
        if w == ctx.identity:
            continue
        for k in ctx.generators:
            if k in right_descents(ctx, w):
                continue
            inclusion, required, equality = check_product_law(ctx, w, k)
            key = [word_of(ctx, w), k]
            inc.record(inclusion, key)
            eq.record(equality if required else None, key)
    return report


def w0_stability_sweep(ctx, max_len):
    report = bt.Report()
    s = report.stmt("w0_stable_in_fundamental_chamber")
    for w in enumerate_by_length(ctx, max_len):
        if w == ctx.identity or not is_fundamental_chamber(ctx, w):
            s.record(None)
            continue
        try:
            s.record(check_w0_stability(ctx, w), [word_of(ctx, w)])
        except PreconditionError:
            s.record(None)
    return report


def reflection_closure_sweep(ctx, max_len):
    report = bt.Report()
    s = report.stmt("annex_closed_under_shortening_reflections")
    for w in enumerate_by_length(ctx, max_len):
        s.record(reflection_closure_check(ctx, w), [word_of(ctx, w)])
    return report


def three_parallel_sweep(ctx, levels=range(-3, 4), samples=20, rng=None):
    """``r3 r2 r1 = r2`` as elements, plus the same identity on sampled alcoves."""
    rng = rng if rng is not None else random.Random(0)
    report = bt.Report()
    s = report.stmt("three_parallel_collapse")
    act = report.stmt("three_parallel_collapse_on_alcoves")
    sample = rng.sample(enumerate_by_length(ctx, 6), samples)
    for gamma in ctx.positive_roots:
        for m in levels:
            lhs = bt.three_parallel_compose(ctx, gamma, m)
            r2 = bt.reflection_element(ctx, Hyperplane(gamma, m + 1))
            key = [list(gamma), m]
            s.record(lhs == r2, key)
            act.record(all(ctx.mul(lhs, x) == ctx.mul(r2, x) for x in sample), key)
    return report


def transport_sweep(ctx, levels=range(-2, 3)):
    """Translated walls: level formula against conjugation, direction preserved."""
    report = bt.Report()
    s = report.stmt("transport_matches_conjugation")
    roots = ctx.positive_roots
    for gamma in roots:
        for n1 in levels:
            for n2 in levels:
                for alpha in roots:
                    for m in levels:
                        r1, r2, H3 = Hyperplane(gamma, n1), Hyperplane(gamma, n2), Hyperplane(alpha, m)
                        got = bt.transport_hyperplane(ctx, r2, r1, H3)
                        s.record(got == bt.transport_by_conjugation(ctx, r2, r1, H3)
                                 and got.direction == alpha,
                                 [list(gamma), n1, n2, list(alpha), m])
    return report


def halfspace_sweep(ctx, max_len, levels=range(-4, 5)):
    """Length and barycenter criteria pick the same side of every wall."""
    report = bt.Report()
    s = report.stmt("halfspace_criteria_agree")
    for x in enumerate_by_length(ctx, max_len):
        for gamma in ctx.positive_roots:
            for k in levels:
                H = Hyperplane(gamma, k)
                s.record(bt.halfspace_side(ctx, H, x) == bt.halfspace_side_geometric(ctx, H, x),
                         [word_of(ctx, x), list(gamma), k])
    return report
