"""Combinatorial galleries stored as decorated words.

A gallery is a start alcove and a sequence of ``(panel_type, folded)`` steps.
An unfolded step moves ``c -> c s_j``; a folded step stays at ``c`` after
touching the same panel. Decorated strings put ``~`` after each folded letter,
e.g. ``"01~20"`` folds at the second step.
"""
from typing import NamedTuple

import numpy as np

from . import _kernels
from .bruhat import CapExceededError
from .coxeter_core import parse_word, reduced_word

DEFAULT_FOLDING_CAP = 12


class Gallery(NamedTuple):
    start: object
    steps: tuple  # ((panel_type, folded), ...)

    @property
    def type_word(self):
        return [j for j, _ in self.steps]

    @property
    def fold_set(self):
        return frozenset(t for t, (_, f) in enumerate(self.steps, 1) if f)

    def __len__(self):
        return len(self.steps)


def decorated(gallery):
    return "".join(str(j) + ("~" if f else "") for j, f in gallery.steps)


def parse_decorated(ctx, text, start=None):
    steps = []
    for ch in text.strip():
        if ch == "~":
            if not steps or steps[-1][1]:
                raise ValueError("misplaced fold marker in %r" % text)
            steps[-1] = (steps[-1][0], True)
        else:
            steps.append((parse_word(ctx, ch)[0], False))
    return Gallery(ctx.identity if start is None else start, tuple(steps))


def gallery_from_word(ctx, c0, word):
    """Unfolded gallery of type ``word`` starting at ``c0``."""
    parse_word(ctx, "".join(map(str, word)))
    return Gallery(c0, tuple((j, False) for j in word))


def alcoves(ctx, gallery):
    """Induced alcove sequence ``c_0, ..., c_n``."""
    seq = [gallery.start]
    c = gallery.start
    for j, folded in gallery.steps:
        if not folded:
            c = ctx.rmul_gen(c, j)
        seq.append(c)
    return seq


def end_alcove(ctx, gallery):
    c = gallery.start
    for j, folded in gallery.steps:
        if not folded:
            c = ctx.rmul_gen(c, j)
    return c


def multifold(ctx, gallery, J):
    """Fold/unfold at every (1-based) index in ``J``: fold set becomes ``F xor J``."""
    J = frozenset(J)
    n = len(gallery.steps)
    if any(not 1 <= t <= n for t in J):
        raise IndexError("fold index out of range 1..%d: %r" % (n, sorted(J)))
    steps = tuple((j, f != (t in J)) for t, (j, f) in enumerate(gallery.steps, 1))
    return Gallery(gallery.start, steps)


def fold_by_reflection(ctx, gallery, t):
    """Alcove sequence of ``gallery^t`` built geometrically.

    Keeps ``c_0 .. c_{t-1}`` and reflects ``c_t .. c_n`` across the wall of panel ``p_t``.
    """
    seq = alcoves(ctx, gallery)
    j = gallery.steps[t - 1][0]
    c = seq[t - 1]
    r = ctx.mul(ctx.mul(c, ctx.gens[j]), ctx.inverse(c))
    return seq[:t] + [ctx.mul(r, a) for a in seq[t:]]


def footprint(ctx, gallery):
    """Unfolded gallery over the non-folded letters."""
    return Gallery(gallery.start, tuple((j, False) for j, f in gallery.steps if not f))


def translate(ctx, x, gallery):
    """Left action ``x . gallery``."""
    return Gallery(ctx.mul(x, gallery.start), gallery.steps)


def shadow_via_foldings(ctx, w, cap=DEFAULT_FOLDING_CAP, word=None):
    """End alcoves of every multifolding of one minimal gallery from 1 to ``w``."""
    if word is None:
        word = reduced_word(ctx, w)
    n = len(word)
    if n > cap:
        raise CapExceededError("length %d exceeds folding cap %d" % (n, cap))
    if n == 0:
        return {ctx.identity}
    # Row for mask m keeps the letters whose bit is set, i.e. fold set J = complement of m.
    rows = _kernels.subword_products(ctx.gens_packed, np.array(word), ctx.rank)
    return {ctx.unpack(row) for row in np.unique(rows, axis=0)}


def crossing_count(ctx, gallery, H):
    """Number of steps whose panel lies in ``H``."""
    if gallery.fold_set:
        raise ValueError("crossing_count expects an unfolded gallery")
    count = 0
    c = gallery.start
    for j, _ in gallery.steps:
        if ctx.wall_of_panel(c, j) == H:
            count += 1
        c = ctx.rmul_gen(c, j)
    return count
