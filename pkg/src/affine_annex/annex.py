"""Annexes ``Annex(w) = {y : w is not <= y}`` and their structural properties."""
from collections import deque
from typing import NamedTuple

from .bruhat import leq
from .coxeter_core import (
    finite_weyl_group, is_fundamental_chamber, parabolic_elements, right_descents,
    separating_walls)


class AnnexCapError(RuntimeError):
    """BFS reached an element longer than the safety cap (would indicate a bug)."""


class PreconditionError(ValueError):
    pass


class Annex(NamedTuple):
    owner: object
    members: frozenset
    boundary: frozenset  # {(y, i) : y member, y s_i not a member}

    @property
    def boundary_alcoves(self):
        return frozenset(y for y, _ in self.boundary)


def default_cap(ctx, w):
    return ctx.length(w) + 2 * len(finite_weyl_group(ctx))


def annex(ctx, w, max_len=None):
    """Enumerate ``Annex(w)`` by BFS from the identity.

    Only length-increasing steps are followed. Every member has a reduced
    word whose prefixes are members too (they lie below it in Bruhat order),
    so every member is reached, and the search dies out because the annex is
    finite.
    """
    if max_len is None:
        max_len = default_cap(ctx, w)
    if w == ctx.identity:
        return Annex(w, frozenset(), frozenset())
    members = {ctx.identity}
    queue = deque([ctx.identity])
    while queue:
        y = queue.popleft()
        ly = ctx.length(y)
        for i in ctx.generators:
            z = ctx.rmul_gen(y, i)
            if z in members or ctx.length(z) < ly:
                continue
            if not leq(ctx, w, z):
                if ly + 1 > max_len:
                    raise AnnexCapError("annex of %r exceeded length cap %d" % (w, max_len))
                members.add(z)
                queue.append(z)
    boundary = {(y, i) for y in members for i in ctx.generators
                if ctx.rmul_gen(y, i) not in members}
    return Annex(w, frozenset(members), frozenset(boundary))


def annex_naive(ctx, w, elements):
    """Annex restricted to an explicit element list (cross-check helper)."""
    return {y for y in elements if not leq(ctx, w, y)}


def annex_max_length(ctx, A):
    return max((ctx.length(y) for y in A.members), default=-1)


def check_boundary_types(ctx, w, A=None):
    """Boundary panel types lie in ``D_R(w)``, and members are closed under non-descent steps."""
    A = annex(ctx, w) if A is None else A
    descents = right_descents(ctx, w)
    if any(i not in descents for _, i in A.boundary):
        return False
    others = [i for i in ctx.generators if i not in descents]
    return all(ctx.rmul_gen(y, i) in A.members for y in A.members for i in others)


def annex_product(ctx, w, k, A=None):
    """``Annex(w) . W_{I - {k}}`` for ``w != 1`` and ``k`` not a right descent of ``w``."""
    if w == ctx.identity:
        raise PreconditionError("annex_product needs w != 1")
    if k in right_descents(ctx, w):
        raise PreconditionError("k = %d is a right descent of w" % k)
    A = annex(ctx, w) if A is None else A
    par = parabolic_elements(ctx, [i for i in ctx.generators if i != k])
    return {ctx.mul(x, y) for x in A.members for y in par}


def check_product_law(ctx, w, k):
    """Return ``(inclusion_holds, equality_required, equality_holds)``."""
    A = annex(ctx, w)
    prod = annex_product(ctx, w, k, A)
    wk = ctx.rmul_gen(w, k)
    target = annex(ctx, wk).members
    required = right_descents(ctx, wk) == {k}
    return target <= prod, required, target == prod


def check_w0_stability(ctx, w, A=None):
    """Left ``W_0``-stability of the annex of a fundamental-chamber element."""
    if not is_fundamental_chamber(ctx, w):
        raise PreconditionError("w is not in the fundamental chamber")
    A = annex(ctx, w) if A is None else A
    w0 = finite_weyl_group(ctx)
    return all(ctx.mul(v, z) in A.members for v in w0 for z in A.members)


def reflection_closure_check(ctx, w, A=None):
    """Every length-decreasing reflection maps a member to a member.

    The reflections with ``l(rx) < l(x)`` are exactly those whose walls
    separate ``x`` from the fundamental alcove.
    """
    A = annex(ctx, w) if A is None else A
    for x in A.members:
        lx = ctx.length(x)
        for H in separating_walls(ctx, x):
            rx = ctx.mul(ctx.reflection(*H), x)
            if ctx.length(rx) >= lx:
                raise AssertionError("separating wall did not shorten %r" % (x,))
            if rx not in A.members:
                return False
    return True
