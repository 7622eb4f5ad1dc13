"""Affine Weyl group elements with exact integer arithmetic.

An element is the affine map ``x -> M x + lam`` on simple-coroot coordinates,
i.e. ``t_lam * w0`` with ``w0`` the finite part acting first. ``M`` is an
integer matrix (flattened row-major) and ``lam`` lies in the coroot lattice.
Generator 0 is the affine reflection in ``H_{theta,1}``; generators ``1..r``
are the finite simple reflections.
"""
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import _kernels
from .root_data import (
    AffineType, UnsupportedTypeError, alcove_barycenter, alcove_vertices,
    common_denominator, coxeter_matrix, root_system)


class Element(NamedTuple):
    mat: tuple
    trans: tuple


class Hyperplane(NamedTuple):
    """Wall ``H_{direction, level} = {x : <x, direction> = level}``, direction a positive root."""
    direction: tuple
    level: int


class WordError(ValueError):
    """A word contains a letter outside the generator set."""


def _identity_mat(r):
    return tuple(1 if i == j else 0 for i in range(r) for j in range(r))


def _mat_mul(a, b, r):
    return tuple(sum(a[i * r + k] * b[k * r + j] for k in range(r))
                 for i in range(r) for j in range(r))


def _mat_apply(a, v, r):
    return tuple(sum(a[i * r + k] * v[k] for k in range(r)) for i in range(r))


def _mat_inverse(a, r):
    if r == 1:
        return (a[0],)  # det is +-1
    det = a[0] * a[3] - a[1] * a[2]
    return (a[3] * det, -a[1] * det, -a[2] * det, a[0] * det)


class GroupContext:
    """Type tag plus every precomputed table the group arithmetic needs."""

    def __init__(self, tag):
        self.affine_type = AffineType(tag)
        self.tag = tag
        self.rs = root_system(tag)
        self.rank = r = self.rs.rank
        self.generators = self.affine_type.generators
        self.coxeter_matrix = coxeter_matrix(self.rs)
        self.identity = Element(_identity_mat(r), (0,) * r)
        self.barycenter = alcove_barycenter(self.rs)
        self.alcove_vertices = alcove_vertices(self.rs)
        # scaled integer barycenter: pairings become integers, levels become multiples of scale
        self.scale = common_denominator(self.barycenter)
        self.bary_scaled = tuple(int(c * self.scale) for c in self.barycenter)
        self.positive_roots = self.rs.positive_roots
        self.functionals = tuple(self.rs.root_functional(g) for g in self.positive_roots)
        theta = self.rs.highest_root
        self.gens = (self.reflection(theta, 1),) + tuple(
            self.reflection(a, 0) for a in self.rs.simple_roots)
        self.gens_packed = np.array([self.pack(g) for g in self.gens], dtype=np.int64)
        self._reflection_mats = {self.reflection(g, 0).mat: g for g in self.positive_roots}
        self._length_cache = {}

    def __repr__(self):
        return "GroupContext(%r)" % self.tag

    # -- arithmetic -------------------------------------------------------

    def mul(self, a, b):
        r = self.rank
        m = _mat_mul(a.mat, b.mat, r)
        t = _mat_apply(a.mat, b.trans, r)
        return Element(m, tuple(t[i] + a.trans[i] for i in range(r)))

    def inverse(self, a):
        r = self.rank
        mi = _mat_inverse(a.mat, r)
        t = _mat_apply(mi, a.trans, r)
        return Element(mi, tuple(-c for c in t))

    def rmul_gen(self, a, i):
        return self.mul(a, self.gens[i])

    def lmul_gen(self, i, a):
        return self.mul(self.gens[i], a)

    def act(self, a, x):
        """Image of a rational point under ``a``."""
        r = self.rank
        y = _mat_apply(a.mat, x, r)
        return tuple(Fraction(y[i]) + a.trans[i] for i in range(r))

    def reflection(self, gamma, k):
        """Element acting as ``s_{gamma;k}``."""
        r = self.rank
        gv = self.rs.coroot(gamma)
        f = self.rs.root_functional(gamma)
        m = tuple((1 if i == j else 0) - gv[i] * f[j] for i in range(r) for j in range(r))
        return Element(m, tuple(k * c for c in gv))

    def pack(self, a):
        return tuple(a.mat) + tuple(a.trans)

    def unpack(self, row):
        r = self.rank
        row = tuple(int(v) for v in row)
        return Element(row[: r * r], row[r * r:])

    # -- geometry ---------------------------------------------------------

    def scaled_image(self, a):
        """``scale * a(b0)``: an integer point."""
        r = self.rank
        y = _mat_apply(a.mat, self.bary_scaled, r)
        return tuple(y[i] + self.scale * a.trans[i] for i in range(r))

    def scaled_pairing(self, a, gamma):
        """``scale * <a(b0), gamma>``; never divisible by ``scale``."""
        p = self.scaled_image(a)
        f = self.rs.root_functional(gamma)
        return sum(p[k] * f[k] for k in range(self.rank))

    def bary_pairing(self, a, gamma):
        return Fraction(self.scaled_pairing(a, gamma), self.scale)

    def strip(self, a, gamma):
        """Integer ``j`` with ``j < <a(b0), gamma> < j + 1``."""
        return self.scaled_pairing(a, gamma) // self.scale

    def length(self, a):
        cached = self._length_cache.get(a)
        if cached is not None:
            return cached
        p = self.scaled_image(a)
        s = self.scale
        total = 0
        for f in self.functionals:
            v = sum(p[k] * f[k] for k in range(self.rank)) // s
            total += v if v >= 0 else -v
        self._length_cache[a] = total
        return total

    def vertices(self, a):
        """Vertices of the alcove of ``a`` (rational, simple-coroot coordinates)."""
        return tuple(self.act(a, v) for v in self.alcove_vertices)

    def hyperplane_of(self, refl):
        """Wall fixed by a reflection element."""
        gamma = self._reflection_mats.get(refl.mat)
        if gamma is None:
            raise ValueError("element is not a reflection")
        gv = self.rs.coroot(gamma)
        j = next(idx for idx, c in enumerate(gv) if c != 0)
        k, rem = divmod(refl.trans[j], gv[j])
        if rem or tuple(k * c for c in gv) != refl.trans:
            raise ValueError("element is not a reflection")
        return Hyperplane(gamma, k)

    def wall_of_panel(self, a, i):
        """Wall containing the type-``i`` panel of the alcove ``a``: fixed set of ``a s_i a^-1``."""
        return self.hyperplane_of(self.mul(self.mul(a, self.gens[i]), self.inverse(a)))


@lru_cache(maxsize=None)
def get_context(tag):
    """Shared, immutable context for a type tag (``"A2~"``, ``"C2~"``, ``"G2~"``, ``"A1~"``)."""
    return GroupContext(tag)


# -- words ---------------------------------------------------------------

def parse_word(ctx, text):
    """Digit string to a list of generator indices; ``""`` and ``"e"`` denote the empty word."""
    text = text.strip()
    if text in ("", "e"):
        return []
    letters = []
    for ch in text:
        if not ch.isdigit() or int(ch) not in ctx.generators:
            raise WordError("invalid letter %r for type %s (generators %s)" % (
                ch, ctx.tag, "".join(map(str, ctx.generators))))
        letters.append(int(ch))
    return letters


def format_word(word):
    return "".join(str(i) for i in word)


def from_word(ctx, word):
    w = ctx.identity
    for i in word:
        if i not in ctx.generators:
            raise WordError("invalid generator index %r for type %s" % (i, ctx.tag))
        w = ctx.mul(w, ctx.gens[i])
    return w


def mul_simple_right(ctx, w, i):
    return ctx.rmul_gen(w, i)


def length(ctx, w):
    """Number of walls separating the fundamental alcove from the alcove of ``w``."""
    return ctx.length(w)


def right_descents(ctx, w):
    lw = ctx.length(w)
    return {i for i in ctx.generators if ctx.length(ctx.rmul_gen(w, i)) < lw}


def left_descents(ctx, w):
    lw = ctx.length(w)
    return {i for i in ctx.generators if ctx.length(ctx.lmul_gen(i, w)) < lw}


def reduced_word(ctx, w):
    """Greedy descent walk; at each step peel the smallest right descent."""
    letters = []
    lw = ctx.length(w)
    while lw:
        for i in ctx.generators:
            v = ctx.rmul_gen(w, i)
            lv = ctx.length(v)
            if lv < lw:
                letters.append(i)
                w, lw = v, lv
                break
    letters.reverse()
    return letters


def word_of(ctx, w):
    """Canonical digit-string serialization."""
    return format_word(reduced_word(ctx, w))


def element_json(ctx, w):
    return {"type": ctx.tag, "word": word_of(ctx, w)}


def element_from_json(obj):
    ctx = get_context(obj["type"])
    return ctx, from_word(ctx, parse_word(ctx, obj["word"]))


def is_reduced(ctx, word):
    return ctx.length(from_word(ctx, word)) == len(word)


def parabolic_elements(ctx, J):
    """All elements of the standard parabolic subgroup ``W_J`` for a proper subset ``J``."""
    J = sorted(set(J))
    if any(j not in ctx.generators for j in J):
        raise WordError("invalid generator in %r" % (J,))
    if len(J) == len(ctx.generators):
        raise ValueError("W_J is infinite for J = I")
    seen = {ctx.identity}
    order = [ctx.identity]
    queue = deque(order)
    while queue:
        w = queue.popleft()
        for j in J:
            v = ctx.rmul_gen(w, j)
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    return order


def finite_weyl_group(ctx):
    return parabolic_elements(ctx, [i for i in ctx.generators if i != 0])


def length_shells(ctx, L):
    """Elements grouped by length: ``shells[k]`` holds every element of length ``k <= L``."""
    shells = [[ctx.identity]]
    for k in range(L):
        nxt = {}
        for w in shells[k]:
            for i in ctx.generators:
                v = ctx.rmul_gen(w, i)
                if v not in nxt and ctx.length(v) == k + 1:
                    nxt[v] = None
        shells.append(sorted(nxt, key=lambda v: reduced_word(ctx, v)))
    return shells


def enumerate_by_length(ctx, L):
    if L < 0:
        raise ValueError("L must be nonnegative")
    return [w for shell in length_shells(ctx, L) for w in shell]


def batch_lengths(ctx, elements):
    """Lengths of many elements at once through the array kernel."""
    if not elements:
        return []
    arr = np.array([ctx.pack(w) for w in elements], dtype=np.int64)
    out = _kernels.batch_lengths(arr, np.array(ctx.bary_scaled), ctx.scale,
                                 np.array(ctx.functionals), ctx.rank)
    return [int(v) for v in out]


def is_fundamental_chamber(ctx, w):
    if not ctx.affine_type.is_plane:
        raise UnsupportedTypeError("fundamental chamber test needs a plane type")
    lw = ctx.length(w)
    return all(ctx.length(ctx.lmul_gen(i, w)) > lw for i in ctx.generators if i != 0)


def separating_walls(ctx, w):
    """Walls strictly between the fundamental alcove and ``w``; there are exactly ``length(w)``."""
    walls = []
    for gamma in ctx.positive_roots:
        j = ctx.strip(w, gamma)
        if j >= 0:
            walls.extend(Hyperplane(gamma, k) for k in range(1, j + 1))
        else:
            walls.extend(Hyperplane(gamma, k) for k in range(j + 1, 1))
    return walls


def panel_in_wall(ctx, a, i, H):
    """True iff the type-``i`` panel of ``a`` lies in ``H``."""
    return ctx.wall_of_panel(a, i) == H


def alcove_meets_wall(ctx, a, H):
    """True iff some vertex of the alcove of ``a`` lies on ``H``."""
    f = ctx.rs.root_functional(H.direction)
    return any(sum(v[k] * f[k] for k in range(ctx.rank)) == H.level for v in ctx.vertices(a))


def reduced_words(ctx, w, limit=None):
    """Every reduced word of ``w`` in lexicographic order (at most ``limit`` of them)."""
    out = []

    def walk(v, suffix):
        if limit is not None and len(out) >= limit:
            return
        lv = ctx.length(v)
        if lv == 0:
            out.append(suffix[::-1])
            return
        for i in ctx.generators:
            u = ctx.rmul_gen(v, i)
            if ctx.length(u) < lv:
                walk(u, suffix + [i])

    walk(w, [])
    return sorted(out)
