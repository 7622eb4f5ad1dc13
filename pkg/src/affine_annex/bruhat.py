"""Bruhat order: lifting-property predicate, subword oracle, lower and general intervals."""
from typing import NamedTuple

from . import _kernels
from .coxeter_core import reduced_word

import numpy as np

DEFAULT_ORACLE_CAP = 14


class CapExceededError(RuntimeError):
    """A brute-force routine was asked to enumerate beyond its configured cap."""


class BruhatInterval(NamedTuple):
    low: object
    high: object
    members: frozenset


def leq(ctx, x, y):
    """``x <= y`` by peeling right descents of ``y`` (the lifting property).

    The walk never branches: with ``i`` the smallest descent of ``y``, either
    both ``x`` and ``y`` drop by ``s_i`` or only ``y`` does.
    """
    length = ctx.length
    lx, ly = length(x), length(y)
    while True:
        if lx > ly:
            return False
        if lx == ly:
            return x == y
        if lx == 0:
            return True
        for i in ctx.generators:
            ys = ctx.rmul_gen(y, i)
            if length(ys) < ly:
                break
        y, ly = ys, ly - 1
        xs = ctx.rmul_gen(x, i)
        lxs = length(xs)
        if lxs < lx:
            x, lx = xs, lxs


def subword_products(ctx, word):
    """Distinct elements obtained as products of subwords of ``word``."""
    if not word:
        return {ctx.identity}
    rows = _kernels.subword_products(ctx.gens_packed, np.array(word), ctx.rank)
    rows = np.unique(rows, axis=0)
    return {ctx.unpack(row) for row in rows}


def leq_oracle(ctx, x, y, word=None, cap=DEFAULT_ORACLE_CAP):
    """Brute force: does some subword of a reduced word of ``y`` evaluate to ``x``?

    ``word`` may supply a specific reduced word of ``y``; otherwise the greedy
    reduced word is used.
    """
    if word is None:
        word = reduced_word(ctx, y)
    if len(word) > cap:
        raise CapExceededError("length %d exceeds oracle cap %d" % (len(word), cap))
    return x in subword_products(ctx, word)


def shadow(ctx, w):
    """Lower interval ``[1, w]``.

    For a descent ``i`` of ``w``: ``[1, w] = [1, ws_i] | [1, ws_i] s_i``.
    """
    chain = []
    lw = ctx.length(w)
    while lw:
        i = next(i for i in ctx.generators if ctx.length(ctx.rmul_gen(w, i)) < lw)
        chain.append(i)
        w = ctx.rmul_gen(w, i)
        lw -= 1
    members = {ctx.identity}
    for i in reversed(chain):
        members |= {ctx.rmul_gen(v, i) for v in members}
    return members


def interval(ctx, x, y):
    """``[x, y]`` as ``Sh(y) - Annex(x)``, cross-checked against direct filtering."""
    from .annex import annex

    lower = shadow(ctx, y)
    members = lower - annex(ctx, x).members
    filtered = {z for z in lower if leq(ctx, x, z)}
    if members != filtered:
        raise AssertionError("interval paths disagree for %r, %r" % (x, y))
    return BruhatInterval(x, y, frozenset(members))
