"""Self-contained reference computations the tests compare against.

Everything here deliberately avoids the package's own elimination and
nullspace code: plain Gauss-Jordan over Fraction on the full set of
symmetric-matrix unknowns. Slow, obviously correct, and wrong in different
ways than the production route would be.
"""

from fractions import Fraction


def rref_fraction(rows):
    """In-place reduced row echelon form; returns the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1, 1) / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def dense_xspace_dim(g, tau):
    """Dimension of the symmetric solution space of the two matrix equations
    defining completability witnesses, using every entry X_ij (i <= j) as an
    unknown instead of the reduced complement-edge system."""
    tau = Fraction(tau)
    n = g.n
    unknowns = [(i, j) for i in range(n) for j in range(i, n)]
    col = {p: k for k, p in enumerate(unknowns)}

    def var(i, j):
        return col[(i, j) if i <= j else (j, i)]

    rows = []
    # entrywise vanishing on the diagonal and on edges
    for i in range(n):
        row = [Fraction(0)] * len(unknowns)
        row[var(i, i)] = Fraction(1)
        rows.append(row)
    for i, j in g.edges():
        row = [Fraction(0)] * len(unknowns)
        row[var(i, j)] = Fraction(1)
        rows.append(row)
    # (A - tau I) X = 0, one equation per matrix position
    for i in range(n):
        nbrs = list(g.neighbours(i))
        for j in range(n):
            row = [Fraction(0)] * len(unknowns)
            for k in nbrs:
                row[var(k, j)] += 1
            row[var(i, j)] -= tau
            rows.append(row)
    rank = rref_fraction(rows)
    return len(unknowns) - rank
