"""Walls, half-spaces and parallel reflection sequences, plus the verifiers
for the boundary statements about annexes in the plane types.

Conventions
-----------
A :class:`ReflectionSequence` is ``r_1, ..., r_n`` in one positive root
direction with levels ``start, start + step, ...`` (``step = +-1``). Its
``r_0`` is the next parallel wall on the other side of ``r_1``, at level
``start - step``. "``x`` lies between ``H_a`` and ``H_b``" for adjacent levels
means ``<x(b0), gamma>`` is strictly between them, decided exactly on the
scaled barycenter.

Every verifier separates *hypothesis not met* (skipped) from *conclusion
false* (failure).
"""
import enum
from typing import NamedTuple

from .annex import annex
from .coxeter_core import (
    Hyperplane, UnsupportedTypeError, alcove_meets_wall, enumerate_by_length,
    finite_weyl_group, reduced_word, right_descents, word_of)


class HypothesisError(ValueError):
    """The instance does not satisfy the statement's hypotheses."""


class Side(enum.Enum):
    IDENTITY = "identity"
    INFINITY = "infinity"


class ReflectionSequence(NamedTuple):
    direction: tuple
    start: int
    step: int
    n: int

    @property
    def levels(self):
        return [self.start + t * self.step for t in range(self.n)]

    @property
    def r0_level(self):
        return self.start - self.step

    def walls(self):
        return [Hyperplane(self.direction, k) for k in self.levels]

    def reflections(self, ctx):
        return [ctx.reflection(self.direction, k) for k in self.levels]


class DaggerInstance(NamedTuple):
    seq: ReflectionSequence
    w: object
    i: int


# -- reports -----------------------------------------------------------------

class StatementReport:
    """Counts for one statement: qualifying instances, passes, skips, failures."""

    def __init__(self, name):
        self.name = name
        self.instances = 0
        self.passed = 0
        self.skipped = 0
        self.failures = []

    def record(self, outcome, key=None):
        if outcome is None:
            self.skipped += 1
            return
        self.instances += 1
        if outcome:
            self.passed += 1
        else:
            self.failures.append(key)

    @property
    def ok(self):
        return not self.failures

    def as_dict(self):
        return {"instances": self.instances, "passed": self.passed,
                "skipped": self.skipped, "failures": sorted(self.failures)}


class Report(dict):
    """Mapping statement name -> :class:`StatementReport`."""

    def stmt(self, name):
        if name not in self:
            self[name] = StatementReport(name)
        return self[name]

    @property
    def ok(self):
        return all(s.ok for s in self.values())

    def as_dict(self):
        return {name: s.as_dict() for name, s in sorted(self.items())}

    def merge(self, other):
        for name, s in other.items():
            mine = self.stmt(name)
            mine.instances += s.instances
            mine.passed += s.passed
            mine.skipped += s.skipped
            mine.failures.extend(s.failures)
        return self


def _plane(ctx):
    if not ctx.affine_type.is_plane:
        raise UnsupportedTypeError("%s has a single wall direction" % ctx.tag)


# -- walls and half-spaces ------------------------------------------------------

def reflection_element(ctx, H):
    return ctx.reflection(H.direction, H.level)


def halfspace_side(ctx, H, x):
    """Side of ``H`` containing the alcove ``x``, by the length criterion."""
    r = reflection_element(ctx, H)
    return Side.IDENTITY if ctx.length(ctx.mul(r, x)) > ctx.length(x) else Side.INFINITY


def halfspace_side_geometric(ctx, H, x):
    """Same as :func:`halfspace_side`, decided by barycenter pairings."""
    k = H.level * ctx.scale
    here = ctx.scaled_pairing(x, H.direction) - k
    home = ctx.scaled_pairing(ctx.identity, H.direction) - k
    return Side.IDENTITY if (here > 0) == (home > 0) else Side.INFINITY


def in_identity_half(ctx, H, x):
    return halfspace_side(ctx, H, x) is Side.IDENTITY


def identity_half_contained(H_a, H_b):
    """``H_a^1 subset H_b^1`` for parallel walls, compared as level intervals.

    For a positive root the identity alcove pairs into ``(0, 1)``, so the
    identity half of ``H_{gamma,k}`` is ``{p < k}`` when ``k >= 1`` and
    ``{p > k}`` when ``k <= 0``.
    """
    if H_a.direction != H_b.direction:
        raise ValueError("walls are not parallel")
    a, b = H_a.level, H_b.level
    if a >= 1 and b >= 1:
        return a <= b
    if a <= 0 and b <= 0:
        return a >= b
    return False


def between(ctx, x, gamma, k_a, k_b):
    """The alcove ``x`` lies strictly between the adjacent walls at levels ``k_a`` and ``k_b``."""
    if abs(k_a - k_b) != 1:
        raise ValueError("levels are not adjacent")
    return ctx.strip(x, gamma) == min(k_a, k_b)


def three_parallel_compose(ctx, gamma, m):
    """``r_3 r_2 r_1`` for the walls at levels ``m, m+1, m+2``."""
    r1, r2, r3 = (ctx.reflection(gamma, m + t) for t in range(3))
    return ctx.mul(r3, ctx.mul(r2, r1))


def transport_hyperplane(ctx, r2, r1, H3):
    """Image of ``H3`` under the translation ``r2 r1`` (``r1, r2`` parallel walls)."""
    if r1.direction != r2.direction:
        raise ValueError("r1 and r2 are not parallel")
    shift = (r2.level - r1.level) * ctx.rs.coroot_pairing(r1.direction, H3.direction)
    return Hyperplane(H3.direction, H3.level + shift)


def transport_by_conjugation(ctx, r2, r1, H3):
    """Independent route: the wall of ``t r_{H3} t^-1`` with ``t = r2 r1``."""
    t = ctx.mul(reflection_element(ctx, r2), reflection_element(ctx, r1))
    return ctx.hyperplane_of(ctx.mul(ctx.mul(t, reflection_element(ctx, H3)), ctx.inverse(t)))


# -- the +-1 theorem ---------------------------------------------------------------

def pm1_hypothesis(ctx, gamma, m, x, step=1):
    """Walls ``r0, r1, r2`` at ``m, m+step, m+2 step``; returns them if the hypotheses hold."""
    r0, r1, r2 = (ctx.reflection(gamma, m + t * step) for t in range(3))
    lx = ctx.length(x)
    r1x = ctx.mul(r1, x)
    if not between(ctx, x, gamma, m, m + step):
        return None
    if ctx.length(r1x) != lx + 1 or ctx.length(ctx.mul(r2, r1x)) != lx + 2:
        return None
    return r0, r1, r2


def check_pm1(ctx, gamma, m, x, step=1):
    """``l(r0 x) = l(x) +- 1``; raises :class:`HypothesisError` when the hypotheses fail."""
    walls = pm1_hypothesis(ctx, gamma, m, x, step)
    if walls is None:
        raise HypothesisError("x does not satisfy the +-1 hypotheses for (%r, %d, %+d)"
                              % (gamma, m, step))
    return abs(ctx.length(ctx.mul(walls[0], x)) - ctx.length(x)) == 1


def _pm1_candidates(ctx, x):
    for gamma in ctx.positive_roots:
        j = ctx.strip(x, gamma)
        yield gamma, j, 1
        yield gamma, j + 1, -1


def pm1_sweep(ctx, max_len):
    _plane(ctx)
    report = Report()
    s = report.stmt("pm1")
    for x in enumerate_by_length(ctx, max_len):
        for gamma, m, step in _pm1_candidates(ctx, x):
            try:
                ok = check_pm1(ctx, gamma, m, x, step)
            except HypothesisError:
                s.record(None)
                continue
            s.record(ok, [word_of(ctx, x), list(gamma), m, step])
    return report


# -- parallel sequences next to w and the boundary prediction -----------------------

def trajectory(ctx, seq, w, i):
    """``z_t = r_t..r_1 w s_i`` and ``u_t = r_t..r_1 w`` for ``t = 0..n``."""
    z = [ctx.rmul_gen(w, i)]
    u = [w]
    for r in seq.reflections(ctx):
        z.append(ctx.mul(r, z[-1]))
        u.append(ctx.mul(r, u[-1]))
    return z, u


def _steps_ok(ctx, z, u):
    return all(ctx.length(z[t]) == ctx.length(z[t - 1]) + 1 and z[t] != u[t - 1]
               for t in range(1, len(z)))


def dagger_holds(ctx, inst):
    seq, w, i = inst
    if seq.n < 2 or seq.step not in (1, -1) or not ctx.rs.is_positive(seq.direction):
        return False
    if not between(ctx, w, seq.direction, seq.r0_level, seq.start):
        return False
    if i not in right_descents(ctx, w):
        return False
    z, u = trajectory(ctx, seq, w, i)
    return _steps_ok(ctx, z, u)


def theorem_hypotheses(ctx, seq, w, i):
    """Hypotheses of the main theorem (any ``n >= 1``, either direction)."""
    if i not in right_descents(ctx, w):
        return False
    if ctx.strip(w, seq.direction) not in (seq.start, seq.start - 1):
        return False  # a parallel wall sits between w and H_{r_1}
    z, u = trajectory(ctx, seq, w, i)
    return _steps_ok(ctx, z, u)


def theorem_instances(ctx, w, i, max_n):
    """Every ``(seq, r_n..r_1 w s_i)`` satisfying the main theorem's hypotheses."""
    _plane(ctx)
    if i not in right_descents(ctx, w):
        raise HypothesisError("%d is not a right descent of w" % i)
    wi = ctx.rmul_gen(w, i)
    found = []
    for gamma in ctx.positive_roots:
        j = ctx.strip(w, gamma)
        for start in (j + 1, j):
            for step in (1, -1):
                z, u = wi, w
                for t in range(max_n):
                    r = ctx.reflection(gamma, start + t * step)
                    z2, u2 = ctx.mul(r, z), ctx.mul(r, u)
                    if ctx.length(z2) != ctx.length(z) + 1 or z2 == u:
                        break
                    z, u = z2, u2
                    found.append((ReflectionSequence(gamma, start, step, t + 1), z))
    return found


def predicted_boundary(ctx, w, i, max_n):
    return {z for _, z in theorem_instances(ctx, w, i, max_n)}


def main_theorem_sweep(ctx, max_len, max_n=6):
    report = Report()
    member = report.stmt("prediction_in_annex")
    boundary = report.stmt("prediction_on_boundary")
    for w in enumerate_by_length(ctx, max_len):
        descents = right_descents(ctx, w)
        if not descents:
            continue
        A = annex(ctx, w)
        for i in sorted(descents):
            for seq, z in theorem_instances(ctx, w, i, max_n):
                key = [word_of(ctx, w), i, list(seq.direction), seq.start, seq.step, seq.n]
                member.record(z in A.members, key)
                # z s_i = r_n..r_1 w sits in the preshadow, so (z, i) is a boundary panel
                boundary.record((z, i) in A.boundary, key)
    return report


def dagger_instances(ctx, max_len, max_n=6):
    """All (dagger) instances with ``l(w) <= max_len`` and ``2 <= n <= max_n``."""
    _plane(ctx)
    out = []
    for w in enumerate_by_length(ctx, max_len):
        for i in sorted(right_descents(ctx, w)):
            for gamma in ctx.positive_roots:
                j = ctx.strip(w, gamma)
                for start, step in ((j + 1, 1), (j, -1)):
                    for n in range(2, max_n + 1):
                        inst = DaggerInstance(ReflectionSequence(gamma, start, step, n), w, i)
                        if dagger_holds(ctx, inst):
                            out.append(inst)
                        else:
                            break
    return out


def dagger_sweep(ctx, max_len, max_n=6):
    report = Report()
    s = report.stmt("dagger_implies_annex_boundary")
    cache = {}
    for inst in dagger_instances(ctx, max_len, max_n):
        seq, w, i = inst
        if w not in cache:
            cache[w] = annex(ctx, w)
        A = cache[w]
        z = trajectory(ctx, seq, w, i)[0][-1]
        s.record(z in A.members and (z, i) in A.boundary,
                 [word_of(ctx, w), i, list(seq.direction), seq.start, seq.step, seq.n])
    return report


# -- descent propagation -----------------------------------------------------------

def _meet(sets):
    sets = list(sets)
    if not sets:
        return None
    out = set(sets[0])
    for s in sets[1:]:
        out &= s
    return out


def verify_descent_propagation(ctx, inst, report=None):
    """Evaluate each descent/half-space sub-claim on one instance.

    Returns a :class:`Report`; a sub-claim whose hypotheses fail is recorded as
    skipped.
    """
    report = Report() if report is None else report
    seq, w, i = inst
    n = seq.n
    gamma = seq.direction
    key = [word_of(ctx, w), i, list(gamma), seq.start, seq.step, n]
    walls = seq.walls()
    D = lambda x: right_descents(ctx, x)  # noqa: E731
    L = ctx.length
    z, u = trajectory(ctx, seq, w, i)
    base = i in D(w) and n >= 1
    step_ok = base and all(L(z[t]) == L(z[t - 1]) + 1 for t in range(1, n + 1))
    incr = base and all(L(z[t]) > L(z[t - 1]) for t in range(1, n + 1))
    noncoinc = all(z[t] != u[t - 1] for t in range(1, n + 1))
    adjacent = ctx.strip(w, gamma) in (seq.start, seq.start - 1)

    def rec(name, hyp, concl):
        report.stmt(name).record(concl() if hyp else None, key)

    rec("final_element_drops_i", step_ok and noncoinc,
        lambda: i not in D(z[n]))
    for j in sorted(D(z[n])) if step_ok else ():
        hyp = all(z[t] != ctx.rmul_gen(z[t - 1], j) for t in range(1, n + 1))
        report.stmt("shared_descent_propagates").record(
            all(j in D(z[t]) for t in range(1, n + 1)) if hyp else None, key + [j])
    if not step_ok:
        report.stmt("shared_descent_propagates").record(None)
    full = step_ok and noncoinc and adjacent
    rec("descent_meet_or_final_panel", full,
        lambda: bool(_meet(D(z[t]) for t in range(1, n + 1)))
        or any(z[n] == ctx.rmul_gen(z[n - 1], j) for j in D(z[n])))
    rec("prefix_descent_meet", full and n >= 2,
        lambda: bool(_meet(D(z[t]) for t in range(1, n))))
    rec("identity_halves_nest", incr and n >= 3,
        lambda: all(identity_half_contained(walls[t - 2], walls[t - 1]) for t in range(3, n + 1)))
    rec("start_in_every_identity_half", incr and n >= 3,
        lambda: all(in_identity_half(ctx, H, z[0]) for H in walls))
    rec("owner_in_last_identity_half", incr and n >= 3 and z[1] != w,
        lambda: in_identity_half(ctx, walls[-1], w))
    rec("prefix_in_last_identity_half", incr and noncoinc,
        lambda: in_identity_half(ctx, walls[-1], u[n - 1]))
    rec("owner_path_increases", step_ok and noncoinc,
        lambda: all(L(u[t - 1]) < L(u[t]) for t in range(1, n + 1)))
    return report


def descent_sweep(ctx, max_len, max_n=6):
    """Run :func:`verify_descent_propagation` over every oriented sequence next to ``w``."""
    _plane(ctx)
    report = Report()
    for w in enumerate_by_length(ctx, max_len):
        for i in sorted(right_descents(ctx, w)):
            for gamma in ctx.positive_roots:
                j = ctx.strip(w, gamma)
                for start, step in ((j + 1, 1), (j, -1)):
                    for n in range(1, max_n + 1):
                        seq = ReflectionSequence(gamma, start, step, n)
                        verify_descent_propagation(ctx, DaggerInstance(seq, w, i), report)
    return report


# -- structural statements ---------------------------------------------------------

def coset_minimum(ctx, x):
    """Minimal element of ``x W_0``."""
    finite = [i for i in ctx.generators if i != 0]
    lx = ctx.length(x)
    while True:
        for i in finite:
            y = ctx.rmul_gen(x, i)
            if ctx.length(y) < lx:
                x, lx = y, lx - 1
                break
        else:
            return x


def shares_panel(ctx, x, H):
    return any(ctx.wall_of_panel(x, j) == H for j in ctx.generators)


def _pm1_context(ctx, max_len):
    for x in enumerate_by_length(ctx, max_len):
        for gamma, m, step in _pm1_candidates(ctx, x):
            walls = pm1_hypothesis(ctx, gamma, m, x, step)
            yield x, gamma, m, step, walls


def structural_checks(ctx, max_len):
    """Exhaustively instantiate the supporting lemmas over ``l(x) <= max_len``."""
    _plane(ctx)
    report = Report()
    W0 = finite_weyl_group(ctx)
    finite = [i for i in ctx.generators if i != 0]
    elements = enumerate_by_length(ctx, max_len)

    # Minimal elements of xW_0 on the far side of a wall through the coset's vertex.
    s = report.stmt("coset_min_beyond_wall_shares_panel")
    mins = sorted({coset_minimum(ctx, x) for x in elements}, key=lambda m: reduced_word(ctx, m))
    for m in mins:
        coset = [ctx.mul(m, v) for v in W0]
        for gamma in ctx.positive_roots:
            level = ctx.rs.root_functional(gamma)
            level = sum(m.trans[k] * level[k] for k in range(ctx.rank))
            H = Hyperplane(gamma, level)
            far = [y for y in coset if halfspace_side(ctx, H, y) is Side.INFINITY]
            if not far or not in_identity_half(ctx, H, m):
                s.record(None)
                continue
            least = min(ctx.length(y) for y in far)
            for y in far:
                if ctx.length(y) == least:
                    s.record(shares_panel(ctx, y, H), [word_of(ctx, y), list(gamma), level])

    s_pre = report.stmt("preminimal_has_affine_descent")
    s_touch = report.stmt("wall_touching_drop_is_one")
    for x, gamma, m, step, walls in _pm1_context(ctx, max_len):
        if walls is None:
            s_pre.record(None)
            s_touch.record(None)
            continue
        key = [word_of(ctx, x), list(gamma), m, step]
        H0 = Hyperplane(gamma, m)
        H1 = Hyperplane(gamma, m + step)
        # x = y s_j with y the minimum of xW_0 and y sharing a panel with H_{r1}.
        # "x misses H_{r0}" is read as "no panel of x on H_{r0}"; the vertex
        # reading never occurs under the +-1 hypotheses.
        y = coset_minimum(ctx, x)
        pre = (not shares_panel(ctx, x, H0) and ctx.length(x) == ctx.length(y) + 1
               and shares_panel(ctx, y, H1))
        s_pre.record((0 in right_descents(ctx, x)) if pre else None, key)
        r0x = ctx.mul(walls[0], x)
        touch = alcove_meets_wall(ctx, x, H0) and ctx.length(r0x) < ctx.length(x)
        s_touch.record((ctx.length(r0x) == ctx.length(x) - 1) if touch else None, key)

    # w and the identity alcove in one strip between adjacent parallel walls
    s_max = report.stmt("not_maximal_in_finite_coset")
    s_ord = report.stmt("affine_pair_order_not_4")
    for w in elements:
        if not any(ctx.strip(w, g) == 0 for g in ctx.positive_roots):
            s_max.record(None)
            s_ord.record(None)
            continue
        key = [word_of(ctx, w)]
        D = right_descents(ctx, w)
        s_max.record(not set(finite) <= D, key)
        # D_R(w) = {0, i} never happens with m_{0i} = 4
        s_ord.record(not any(D == {0, i} and ctx.coxeter_matrix[0][i] == 4 for i in finite), key)
    return report
