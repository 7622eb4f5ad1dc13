"""Exact root data for the rank-2 affine types and the dihedral type A1~.

Roots are integer tuples of coefficients in the simple-root basis. Points of
the ambient space are tuples of ``Fraction`` coefficients in the simple-coroot
basis, so every pairing used for hyperplane levels is rational.
"""
from fractions import Fraction
from functools import lru_cache
from math import lcm

TYPE_TAGS = ("A2~", "C2~", "G2~", "A1~")

# Symmetric bilinear form (alpha_i, alpha_j) on the simple roots.
# C2: alpha_1 short, alpha_2 long. G2: alpha_1 short, alpha_2 long.
_SYM_FORMS = {
    "A2~": ((2, -1), (-1, 2)),
    "C2~": ((2, -2), (-2, 4)),
    "G2~": ((2, -3), (-3, 6)),
    "A1~": ((2,),),
}


class UnsupportedTypeError(ValueError):
    """Raised for an unknown type tag or an operation the type cannot support."""


class AffineType:
    """A type tag together with its generator set and Coxeter matrix."""

    def __init__(self, tag):
        if tag not in _SYM_FORMS:
            raise UnsupportedTypeError(
                "unknown type tag %r (expected one of %s)" % (tag, ", ".join(TYPE_TAGS)))
        self.tag = tag
        self.rank = len(_SYM_FORMS[tag])
        self.generators = tuple(range(self.rank + 1))

    @property
    def is_plane(self):
        return self.rank == 2

    def __repr__(self):
        return "AffineType(%r)" % self.tag

    def __eq__(self, other):
        return isinstance(other, AffineType) and other.tag == self.tag

    def __hash__(self):
        return hash(self.tag)


def _mat_vec(a, v):
    return tuple(sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a)))


class RootSystem:
    """Finite root system of rank 1 or 2 in the simple-root basis.

    Attributes
    ----------
    sym_form : tuple of tuples of int
        Inner products ``(alpha_i, alpha_j)``.
    cartan : tuple of tuples of int
        ``cartan[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``.
    roots : tuple of root tuples
        All roots, positive first.
    positive_roots : tuple of root tuples
        Sorted by height, then lexicographically.
    highest_root : tuple of int
    """

    def __init__(self, sym_form):
        self.sym_form = tuple(tuple(row) for row in sym_form)
        self.rank = len(self.sym_form)
        n = self.rank
        b = self.sym_form
        self.cartan = tuple(
            tuple(Fraction(2 * b[i][j], b[i][i]) for j in range(n)) for i in range(n))
        for row in self.cartan:
            for entry in row:
                if entry.denominator != 1:
                    raise ValueError("form is not crystallographic")
        self.cartan = tuple(tuple(int(e) for e in row) for row in self.cartan)
        self.simple_roots = tuple(
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        self.roots = self._close_roots()
        positive = [g for g in self.roots if all(c >= 0 for c in g)]
        positive.sort(key=lambda g: (sum(g), g))
        self.positive_roots = tuple(positive)
        self.roots = self.positive_roots + tuple(
            tuple(-c for c in g) for g in self.positive_roots)
        self.highest_root = max(self.positive_roots, key=lambda g: (sum(g), g))

    def _close_roots(self):
        found = set(self.simple_roots)
        found |= {tuple(-c for c in g) for g in self.simple_roots}
        frontier = list(found)
        while frontier:
            new = []
            for g in frontier:
                for i in range(self.rank):
                    h = self.simple_reflect(i, g)
                    if h not in found:
                        found.add(h)
                        new.append(h)
            frontier = new
        return tuple(sorted(found))

    def form(self, g, h):
        """Inner product ``(g, h)`` of two vectors in simple-root coordinates."""
        b = self.sym_form
        return sum(g[i] * b[i][j] * h[j] for i in range(self.rank) for j in range(self.rank))

    def simple_reflect(self, i, g):
        """Image of the root-lattice vector ``g`` under the simple reflection s_i."""
        c = sum(self.cartan[i][j] * g[j] for j in range(self.rank))
        return tuple(g[j] - (c if j == i else 0) for j in range(self.rank))

    def coroot(self, g):
        """Coroot of ``g`` in simple-coroot coordinates (always integral)."""
        norm = self.form(g, g)
        coords = []
        for j in range(self.rank):
            q = Fraction(g[j] * self.sym_form[j][j], norm)
            if q.denominator != 1:
                raise ValueError("coroot of %r is not integral" % (g,))
            coords.append(int(q))
        return tuple(coords)

    def coroot_pairing(self, g, h):
        """``<g^vee, h> = 2 (g, h) / (g, g)``."""
        q = Fraction(2 * self.form(g, h), self.form(g, g))
        if q.denominator != 1:
            raise ValueError("pairing <%r^vee, %r> is not integral" % (g, h))
        return int(q)

    def root_functional(self, g):
        """Coefficients ``f`` with ``<x, g> = sum_k x_k f_k`` for ``x`` in coroot coordinates."""
        return _mat_vec(self.cartan, g)

    def is_positive(self, g):
        return g in self.positive_roots


def pairing(rs, x, gamma):
    """Pairing ``<x, gamma>`` for a point ``x`` in simple-coroot coordinates."""
    f = rs.root_functional(gamma)
    return sum(Fraction(x[k]) * f[k] for k in range(rs.rank))


def affine_reflect(rs, gamma, k, x):
    """Apply ``s_{gamma;k}(x) = x - (<x, gamma> - k) gamma^vee``."""
    c = pairing(rs, x, gamma) - k
    gv = rs.coroot(gamma)
    return tuple(Fraction(x[j]) - c * gv[j] for j in range(rs.rank))


def fundamental_coweights(rs):
    """Fundamental coweights in simple-coroot coordinates: ``<omega_i^vee, alpha_j> = delta_ij``."""
    a = rs.cartan
    if rs.rank == 1:
        return ((Fraction(1, a[0][0]),),)
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    # x^T A = e_i  <=>  x = row i of A^{-1}
    inv = ((Fraction(a[1][1], det), Fraction(-a[0][1], det)),
           (Fraction(-a[1][0], det), Fraction(a[0][0], det)))
    return inv


def alcove_vertices(rs):
    """Vertices of the fundamental alcove, origin first, then ``omega_i^vee / c_i``."""
    theta = rs.highest_root
    origin = tuple(Fraction(0) for _ in range(rs.rank))
    verts = [origin]
    for i, w in enumerate(fundamental_coweights(rs)):
        verts.append(tuple(c / theta[i] for c in w))
    return tuple(verts)


def alcove_barycenter(rs):
    verts = alcove_vertices(rs)
    n = len(verts)
    return tuple(sum(v[j] for v in verts) / n for j in range(rs.rank))


def common_denominator(point):
    return lcm(*(Fraction(c).denominator for c in point))


def coxeter_matrix(rs):
    """Coxeter matrix of the affine group, generator 0 being ``s_{theta;1}``.

    Entry 0 stands for an infinite order (only A1~).
    """
    theta = rs.highest_root
    # Reflection vectors: -theta for the affine node, alpha_i otherwise.
    vecs = [tuple(-c for c in theta)] + list(rs.simple_roots)
    n = len(vecs)
    order_of_product = {0: 2, 1: 3, 2: 4, 3: 6}
    m = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            p = rs.coroot_pairing(vecs[i], vecs[j]) * rs.coroot_pairing(vecs[j], vecs[i])
            m[i][j] = order_of_product.get(p, 0)
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def root_system(tag):
    AffineType(tag)
    return RootSystem(_SYM_FORMS[tag])


def positive_roots(ctx):
    """Positive roots of a plane type. Raises for A1~."""
    if not ctx.affine_type.is_plane:
        raise UnsupportedTypeError("positive_roots requires a plane type, got %s" % ctx.tag)
    return list(ctx.rs.positive_roots)
