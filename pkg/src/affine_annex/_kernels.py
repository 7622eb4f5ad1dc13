"""Array kernels for the two exponential / bulk inner loops.

Elements are packed as int64 rows ``[M (r*r, row-major), lambda (r)]`` for the
affine map ``x -> M x + lambda`` in simple-coroot coordinates.

Two interchangeable backends exist: numba-compiled loops and vectorized numpy.
Set ``AFFINE_ANNEX_DISABLE_NUMBA=1`` to force numpy (also used when numba is
not importable). Both backends are always importable for benchmarking.
"""
import os

import numpy as np

_DISABLE = os.environ.get("AFFINE_ANNEX_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    import numba as nb
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    nb = None
    HAS_NUMBA = False


# -- numpy implementations -------------------------------------------------

def _np_rmul(state, g, r):
    """Right-multiply every packed row of ``state`` by the single packed element ``g``."""
    n = state.shape[0]
    m = state[:, : r * r].reshape(n, r, r)
    lam = state[:, r * r:]
    gm = g[: r * r].reshape(r, r)
    gl = g[r * r:]
    out = np.empty_like(state)
    out[:, : r * r] = (m @ gm).reshape(n, r * r)
    out[:, r * r:] = m @ gl + lam
    return out


def subword_products_numpy(gens, word, r):
    n = len(word)
    count = 1 << n
    width = r * r + r
    state = np.zeros((count, width), dtype=np.int64)
    for k in range(r):
        state[:, k * r + k] = 1
    masks = np.arange(count, dtype=np.int64)
    for t in range(n):
        sel = ((masks >> t) & 1).astype(bool)
        state[sel] = _np_rmul(state[sel], gens[word[t]], r)
    return state


def batch_lengths_numpy(elems, bary, scale, functionals, r):
    n = elems.shape[0]
    m = elems[:, : r * r].reshape(n, r, r)
    lam = elems[:, r * r:]
    pts = m @ bary + scale * lam          # scaled image of the barycenter
    vals = pts @ functionals.T             # (n, npos) scaled pairings
    return np.abs(np.floor_divide(vals, scale)).sum(axis=1)


# -- numba implementations -------------------------------------------------

if HAS_NUMBA:
    @nb.njit(cache=True)
    def subword_products_numba(gens, word, r):
        n = word.shape[0]
        count = 1 << n
        width = r * r + r
        out = np.zeros((count, width), dtype=np.int64)
        cur = np.empty(width, dtype=np.int64)
        tmp = np.empty(width, dtype=np.int64)
        for mask in range(count):
            for k in range(width):
                cur[k] = 0
            for k in range(r):
                cur[k * r + k] = 1
            for t in range(n):
                if (mask >> t) & 1:
                    g = gens[word[t]]
                    for i in range(r):
                        for j in range(r):
                            s = 0
                            for k in range(r):
                                s += cur[i * r + k] * g[k * r + j]
                            tmp[i * r + j] = s
                        s = cur[r * r + i]
                        for k in range(r):
                            s += cur[i * r + k] * g[r * r + k]
                        tmp[r * r + i] = s
                    for k in range(width):
                        cur[k] = tmp[k]
            for k in range(width):
                out[mask, k] = cur[k]
        return out

    @nb.njit(cache=True)
    def batch_lengths_numba(elems, bary, scale, functionals, r):
        n = elems.shape[0]
        npos = functionals.shape[0]
        out = np.zeros(n, dtype=np.int64)
        pt = np.empty(r, dtype=np.int64)
        for e in range(n):
            for i in range(r):
                s = scale * elems[e, r * r + i]
                for k in range(r):
                    s += elems[e, i * r + k] * bary[k]
                pt[i] = s
            total = 0
            for j in range(npos):
                v = 0
                for k in range(r):
                    v += pt[k] * functionals[j, k]
                q = v // scale
                total += q if q >= 0 else -q
            out[e] = total
        return out
else:  # pragma: no cover
    subword_products_numba = None
    batch_lengths_numba = None


USE_NUMBA = HAS_NUMBA and not _DISABLE
BACKEND = "numba" if USE_NUMBA else "numpy"


def subword_products(gens, word, r):
    """Packed products of all ``2**len(word)`` subwords; row ``mask`` keeps letters whose bit is set."""
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    word = np.ascontiguousarray(word, dtype=np.int64)
    if USE_NUMBA:
        return subword_products_numba(gens, word, r)
    return subword_products_numpy(gens, word, r)


def batch_lengths(elems, bary, scale, functionals, r):
    """Lengths of packed elements by counting separating walls at the scaled barycenter."""
    elems = np.ascontiguousarray(elems, dtype=np.int64).reshape(-1, r * r + r)
    bary = np.ascontiguousarray(bary, dtype=np.int64)
    functionals = np.ascontiguousarray(functionals, dtype=np.int64)
    if USE_NUMBA:
        return batch_lengths_numba(elems, bary, int(scale), functionals, r)
    return batch_lengths_numpy(elems, bary, int(scale), functionals, r)
