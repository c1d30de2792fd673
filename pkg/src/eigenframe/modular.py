"""Small modular-arithmetic helpers: GF(2) bit-vector spans, word-size mod-p
elimination, and reduced-echelon enumeration of subspaces over a prime field.

The mod-p elimination is the workhorse behind the certified exact nullspace:
full column rank modulo a prime is already a proof of full column rank over
the rationals, and when the rank is deficient the pivot structure found here
tells the exact solver which square submatrix to invert.
"""

from __future__ import annotations

import itertools

import numpy as np

# Large word-size prime; products of two residues stay below 2**62.
DEFAULT_PRIME = 2_147_483_647


def gf2_rank(vectors) -> int:
    """Rank over GF(2) of integers viewed as bit vectors."""
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def gf2_span(vectors):
    """All XOR combinations of the given bit vectors (includes 0)."""
    span = {0}
    for v in vectors:
        if v not in span:
            span |= {v ^ s for s in span}
    return span


def rank_mod_p(rows, p=DEFAULT_PRIME):
    """Rank of an integer matrix modulo p.

    Returns (rank, pivot_rows, pivot_cols) with indices into the original
    matrix. Elimination order is deterministic: columns left to right,
    pivot row = first nonzero at or below the current row.
    """
    m = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
    if m.size == 0:
        return 0, [], []
    nrows, ncols = m.shape
    perm = list(range(nrows))
    pivot_rows, pivot_cols = [], []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
            perm[r], perm[k] = perm[k], perm[r]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        below = m[r + 1 :, c]
        if below.size:
            m[r + 1 :] = (m[r + 1 :] - np.outer(below, m[r])) % p
        pivot_rows.append(perm[r])
        pivot_cols.append(c)
        r += 1
    return r, pivot_rows, pivot_cols


def rref_mod_q(rows, q):
    """Reduced row echelon form over F_q for a small dense integer matrix.

    Returns (rref_rows as tuple of tuples, pivot_cols). Pure-int arithmetic,
    intended for the subspace enumeration and adjacency tests, not for bulk
    elimination.
    """
    m = [list(map(lambda x: x % q, row)) for row in rows]
    if not m:
        return (), []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if m[i][c] % q), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = pow(m[r][c], q - 2, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m[:r]), pivots


def rank_mod_q(rows, q) -> int:
    return len(rref_mod_q(rows, q)[1])


def subspaces_mod_q(q, n, r):
    """All r-dimensional subspaces of F_q^n as canonical RREF basis matrices.

    Yields r x n tuples of tuples in reduced echelon form; every subspace
    appears exactly once. Iteration order is by pivot-column set and then by
    the free entries, so callers wanting a canonical vertex order should sort.
    """
    for pivots in itertools.combinations(range(n), r):
        free_cells = []
        for i, p in enumerate(pivots):
            for j in range(p + 1, n):
                if j not in pivots:
                    free_cells.append((i, j))
        for values in itertools.product(range(q), repeat=len(free_cells)):
            mat = [[0] * n for _ in range(r)]
            for i, p in enumerate(pivots):
                mat[i][p] = 1
            for (i, j), v in zip(free_cells, values):
                mat[i][j] = v
            yield tuple(tuple(row) for row in mat)


def gaussian_binomial(n, r, q) -> int:
    """Number of r-dimensional subspaces of F_q^n."""
    if r < 0 or r > n:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den
