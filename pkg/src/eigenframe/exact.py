"""Exact rational linear algebra and spectra.

Matrices carry Fraction entries, so everything is reduced with positive
denominators by construction. Elimination is fraction-free (Bareiss) on
integer rows obtained by clearing denominators; the certified fast nullspace
additionally uses a word-size prime to discover the pivot structure, solves
the discovered square system exactly, and verifies every kernel vector
against the full matrix, falling back to pure Bareiss if verification fails.
Full column rank modulo the prime is accepted as a proof of a trivial
nullspace, which is the one-sided bound that keeps large instances cheap.

Least eigenvalues of adjacency matrices are certified exactly: an integer k
is the least eigenvalue iff A - kI is singular and positive semidefinite,
and a symmetric fraction-free pivot pass decides PD / PSD-deficient /
indefinite, so a binary search over the integer range settles integrality
without trusting floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InternalCheckError, NumericalError, UnsupportedInputError
from .graphs import CayleySpec, Graph
from .modular import rank_mod_p

DEFAULT_TOL = 1e-8


def _coerce(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("refusing to build an exact matrix from a float")
    return Fraction(x)


class ExactMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, rows):
        data = tuple(tuple(_coerce(x) for x in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", len(data[0]) if data else 0)

    def __setattr__(self, *a):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def column_stack(cls, vectors):
        return cls([list(col) for col in zip(*vectors)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"

    def __add__(self, other):
        self._same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        self._same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __mul__(self, scalar):
        s = _coerce(scalar)
        return ExactMatrix([[s * x for x in row] for row in self.data])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        cols = list(zip(*other.data))
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.data]
        )

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")

    def transpose(self):
        return ExactMatrix(list(zip(*self.data))) if self.data else ExactMatrix([])

    def trace(self):
        return sum(self.data[i][i] for i in range(min(self.nrows, self.ncols)))

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def submatrix(self, rows, cols):
        return ExactMatrix([[self.data[i][j] for j in cols] for i in rows])

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.data], dtype=float)

    def entries_row_major(self):
        return [x for row in self.data for x in row]


def adjacency_matrix(g: Graph) -> ExactMatrix:
    return ExactMatrix(g.adjacency_rows())


# -- fraction-free elimination -----------------------------------------------


def _integer_rows(m, row_scaling=True):
    """Integer rows from an ExactMatrix or row iterable.

    With row_scaling each row is multiplied by its own denominator lcm (fine
    for rank and nullspace); otherwise one global scalar is used (needed when
    congruence matters, as in the PSD pivot pass).
    """
    data = m.data if isinstance(m, ExactMatrix) else [[Fraction(x) for x in r] for r in m]
    if row_scaling:
        out = []
        for row in data:
            scale = math.lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * scale) for x in row])
        return out
    scale = math.lcm(*(x.denominator for row in data for x in row)) if data else 1
    return [[int(x * scale) for x in row] for row in data]


def _bareiss_echelon(rows):
    """In-place fraction-free row echelon; returns the pivot (row, col) list."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        piv = rows[r][c]
        rowr = rows[r]
        for i in range(r + 1, nrows):
            rowi = rows[i]
            f = rowi[c]
            for j in range(c, ncols):
                rowi[j] = (piv * rowi[j] - f * rowr[j]) // prev
        prev = piv
        pivots.append((r, c))
        r += 1
    return pivots


def rank_exact(m) -> int:
    rows = _integer_rows(m)
    if not rows or not rows[0]:
        return 0
    return len(_bareiss_echelon(rows))


def _back_substitute(rows, pivots, free_col, active_free=()):
    """Kernel vector with value 1 at free_col and 0 at the other free columns."""
    x = {free_col: Fraction(1)}
    for r, c in reversed(pivots):
        row = rows[r]
        s = sum(row[j] * v for j, v in x.items() if j > c)
        if s:
            x[c] = -s / row[c]
    return x


def _normalize_kernel_vector(x, ncols, free_col):
    scale = math.lcm(*(v.denominator for v in x.values()))
    ints = {j: int(v * scale) for j, v in x.items()}
    g = math.gcd(*ints.values())
    if g:
        ints = {j: v // g for j, v in ints.items()}
    if ints.get(free_col, 0) < 0:
        ints = {j: -v for j, v in ints.items()}
    return tuple(Fraction(ints.get(j, 0)) for j in range(ncols))


def nullspace(m):
    """Exact nullspace basis via fraction-free elimination.

    Returns a tuple of integer-normalized vectors (tuples of Fractions); every
    vector is re-checked against the matrix before being returned.
    """
    rows = _integer_rows(m)
    ncols = len(rows[0]) if rows else (m.ncols if isinstance(m, ExactMatrix) else 0)
    if ncols == 0:
        return ()
    if not rows:
        return tuple(
            tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)
        )
    work = [row[:] for row in rows]
    pivots = _bareiss_echelon(work)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = _normalize_kernel_vector(_back_substitute(work, pivots, f), ncols, f)
        basis.append(vec)
    _verify_kernel(rows, basis)
    return tuple(basis)


def _verify_kernel(rows, basis):
    for vec in basis:
        for row in rows:
            if sum(a * b for a, b in zip(row, vec)):
                raise InternalCheckError("kernel vector fails exact verification")


def _rational_reconstruct(a, m):
    """Fraction n/d with a*d = n (mod m), |n|, d <= sqrt(m/2), or None.

    Standard half-extended Euclid on (m, a), stopping at the first remainder
    below the bound.
    """
    bound = math.isqrt(m // 2)
    r0, r1 = m, a % m
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if r1 > bound or t1 == 0 or abs(t1) > bound:
        return None
    if math.gcd(r1, t1) != 1:
        return None
    return Fraction(r1, t1) if t1 > 0 else Fraction(-r1, -t1)


def _inverse_mod_p(s, p):
    """Inverse of a square int64 matrix mod p, or None if singular mod p."""
    n = s.shape[0]
    a = np.concatenate([s % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i, c]), None)
        if piv is None:
            return None
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
        a[c] = (a[c] * pow(int(a[c, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[c] = 0
        a = (a - np.outer(col, a[c])) % p
    return a[:, n:]


def _solve_dixon(s_rows, rhs_cols, p=2_147_483_647):
    """Exact solutions of S y = b for each column b, by p-adic lifting.

    S must be invertible mod p (hence over Q). Candidate solutions come from
    rational reconstruction of the p-adic expansion; each is verified exactly
    before being returned, so a reconstruction failure returns None rather
    than a wrong answer.
    """
    r = len(s_rows)
    if r == 0:
        return [[] for _ in rhs_cols]
    # int64 matvec bounds: |S| < 2^20 and r < 2^12 keep every sum below 2^63
    if r >= 1 << 12 or max(abs(x) for row in s_rows for x in row) >= 1 << 20:
        return None
    s_np = np.array(s_rows, dtype=np.int64)
    c_np = _inverse_mod_p(s_np, p)
    if c_np is None:
        return None
    c_hi, c_lo = c_np >> 16, c_np & 0xFFFF
    solutions = []
    for col in rhs_cols:
        if max((abs(x) for x in col), default=0) >= 1 << 40:
            return None
        b = np.array(col, dtype=np.int64)
        acc = [0] * r
        pk = 1
        steps = 0
        steps_cap = 4 * r + 40
        check_at = 10
        y = None
        while steps < steps_cap:
            bp = b % p
            d = (((c_hi @ bp) % p << 16) + c_lo @ bp) % p
            for i in range(r):
                acc[i] += pk * int(d[i])
            pk *= p
            b = (b - s_np @ d) // p
            steps += 1
            if steps >= check_at or steps == steps_cap:
                check_at *= 2
                cand = [_rational_reconstruct(a, pk) for a in acc]
                if all(v is not None for v in cand):
                    ok = all(
                        sum(s_rows[i][j] * cand[j] for j in range(r)) == col[i]
                        for i in range(r)
                    )
                    if ok:
                        y = cand
                        break
        if y is None:
            return None
        solutions.append(y)
    return solutions


def nullspace_fast(int_rows, ncols):
    """Certified nullspace of an integer matrix.

    Pivot structure is discovered modulo a word-size prime. Full column rank
    mod p already proves a trivial kernel. Otherwise the square pivot
    submatrix (nonsingular over Q because it is nonsingular mod p) is solved
    exactly for each free column, by p-adic lifting when entries are small
    enough and fraction-free elimination otherwise, and every candidate
    vector is verified against the whole matrix; any failure falls back to
    pure elimination. Verified candidates are independent (distinct free
    columns), so their count meeting the mod-p nullity certifies the
    dimension exactly.
    """
    if ncols == 0:
        return ()
    if not int_rows:
        return tuple(
            tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)
        )
    rank, prows, pcols = rank_mod_p(int_rows)
    if rank == ncols:
        return ()
    free = [c for c in range(ncols) if c not in set(pcols)]
    sub = [[int_rows[r][c] for c in pcols] for r in prows]
    rhs = [[int_rows[r][f] for r in prows] for f in free]
    sols = _solve_dixon(sub, rhs) if rank else [[] for _ in free]
    if sols is None:
        sols = _solve_bareiss_square(sub, rhs, rank)
    if sols is None:
        return nullspace(int_rows)
    basis = []
    for t, f in enumerate(free):
        full = {pcols[i]: -sols[t][i] for i in range(rank)}
        full[f] = Fraction(1)
        vec = _normalize_kernel_vector(full, ncols, f)
        for row in int_rows:
            if sum(a * b for a, b in zip(row, vec)):
                return nullspace(int_rows)
        basis.append(vec)
    return tuple(basis)


def _solve_bareiss_square(sub, rhs, rank):
    """Exact solve of the pivot system against every right-hand side."""
    aug = [list(row) + [col[i] for col in rhs] for i, row in enumerate(sub)]
    pivots = _bareiss_echelon(aug)
    if len(pivots) != rank or any(c >= rank for _, c in pivots):
        return None
    sols = []
    for t in range(len(rhs)):
        x = {}
        for r, c in reversed(pivots):
            row = aug[r]
            s = -row[rank + t] + sum(row[j] * v for j, v in x.items() if j > c)
            x[c] = -s / row[c] if s else Fraction(0)
        sols.append([x.get(c, Fraction(0)) for c in range(rank)])
    return sols


def invert(m: ExactMatrix) -> ExactMatrix:
    if m.nrows != m.ncols:
        raise ValueError("only square matrices invert")
    n = m.nrows
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.data)]
    for c in range(n):
        k = next((i for i in range(c, n) if a[i][c]), None)
        if k is None:
            raise ValueError("matrix is singular")
        a[c], a[k] = a[k], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return ExactMatrix([row[n:] for row in a])


def projector_onto_nullspace(m: ExactMatrix) -> ExactMatrix:
    """Orthogonal projector onto the kernel of m, exactly.

    Built as B (B^T B)^{-1} B^T from a kernel basis B; verified idempotent
    and annihilated by m before being returned.
    """
    basis = nullspace(m)
    n = m.ncols
    if not basis:
        return ExactMatrix.zeros(n)
    b = ExactMatrix.column_stack(basis)
    bt = b.transpose()
    proj = b @ invert(bt @ b) @ bt
    if proj @ proj != proj:
        raise InternalCheckError("projector is not idempotent")
    if not (m @ proj).is_zero():
        raise InternalCheckError("projector does not annihilate the matrix")
    return proj


# -- characteristic polynomial and PSD test ----------------------------------


def charpoly(m: ExactMatrix):
    """Coefficients [1, c1, ..., cn] of det(xI - m), by the trace recurrence."""
    if m.nrows != m.ncols:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.nrows
    scale = math.lcm(*(x.denominator for row in m.data for x in row)) if n else 1
    b = [[int(x * scale) for x in row] for row in m.data]
    coeffs_int = [1]
    mk = [row[:] for row in b]
    for k in range(1, n + 1):
        tr = sum(mk[i][i] for i in range(n))
        assert tr % k == 0
        ck = -tr // k
        coeffs_int.append(ck)
        if k == n:
            break
        for i in range(n):
            mk[i][i] += ck
        cols = list(zip(*mk))
        mk = [
            [sum(a * v for a, v in zip(row, col)) for col in cols]
            for row in b
        ]
    return [Fraction(c, scale**k) for k, c in enumerate(coeffs_int)]


def is_psd_exact(m: ExactMatrix) -> bool:
    """Exact positive semidefiniteness via characteristic-coefficient signs.

    A symmetric matrix has all real eigenvalues, and they are all nonnegative
    iff the characteristic coefficients alternate in sign.
    """
    if not m.is_symmetric():
        raise ValueError("PSD test needs a symmetric matrix")
    coeffs = charpoly(m)
    return all(c * (-1) ** k >= 0 for k, c in enumerate(coeffs))


def psd_rank_pivot(m) -> tuple:
    """(status, rank) by symmetric fraction-free pivoting.

    status is one of "pd", "psd" (singular PSD), "indefinite"; rank is valid
    whenever the matrix is PSD. Pivots are taken on positive diagonal entries,
    so scaled Schur diagonals keep the true signs.
    """
    data = m.data if isinstance(m, ExactMatrix) else m
    a = _integer_rows(data, row_scaling=False)
    n = len(a)
    act = list(range(n))
    prev = 1
    rank = 0
    while act:
        if any(a[i][i] < 0 for i in act):
            return "indefinite", None
        piv = next((i for i in act if a[i][i] > 0), None)
        if piv is None:
            for i in act:
                for j in act:
                    if a[i][j]:
                        return "indefinite", None
            return ("pd" if rank == n else "psd"), rank
        act.remove(piv)
        rank += 1
        d = a[piv][piv]
        ap = a[piv]
        for i in act:
            ai = a[i]
            f = ai[piv]
            for j in act:
                ai[j] = (d * ai[j] - f * ap[j]) // prev
        prev = d
    return "pd", rank


# -- spectra -------------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, ascending.

    On the exact backend tau is a Fraction whose multiplicity is verified by
    an exact rank computation; irrational eigenvalues above tau appear as
    floating cluster values (multiplicities still summing to n).
    """

    pairs: tuple
    tau: object
    tau_multiplicity: int
    backend: str
    tolerance: float | None = None

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("empty spectrum")
        if self.tau_multiplicity != self.pairs[0][1]:
            raise ValueError("tau multiplicity disagrees with the first pair")
        vals = [float(v) for v, _ in self.pairs]
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise ValueError("eigenvalues not strictly ascending")

    @property
    def n(self):
        return sum(m for _, m in self.pairs)

    @property
    def distinct_count(self):
        return len(self.pairs)


def _validate_adjacency(m: ExactMatrix):
    if not m.is_symmetric():
        raise ValueError("adjacency matrix must be symmetric")
    for i in range(m.nrows):
        if m.data[i][i] != 0:
            raise ValueError("adjacency matrix must have a zero diagonal")
        for x in m.data[i]:
            if x != 0 and x != 1:
                raise ValueError("adjacency entries must be 0 or 1")


def _cluster(values, tol):
    groups = []
    for v in values:
        if groups and v - groups[-1][-1] <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(sum(g) / len(g), len(g)) for g in groups]


def integer_least_eigenvalue(a: ExactMatrix, tol: float = DEFAULT_TOL):
    """Exact least adjacency eigenvalue when it is an integer, else None.

    Binary search over integers k in [-maxdeg, 0]: A - kI is positive
    definite below the least eigenvalue, singular PSD exactly at it, and
    indefinite above it, so the bracket certifies both outcomes without any
    floating-point trust. Integer eigenvalues elsewhere in the spectrum are
    also certified exactly; irrational ones are reported as floating
    clusters.
    """
    if isinstance(a, Graph):
        a = adjacency_matrix(a)
    _validate_adjacency(a)
    n = a.nrows
    if n == 0:
        raise ValueError("empty matrix has no spectrum")
    rows = [[int(x) for x in row] for row in a.data]
    maxdeg = max(sum(row) for row in rows)

    def status(k):
        shifted = [[rows[i][j] - (k if i == j else 0) for j in range(n)] for i in range(n)]
        return psd_rank_pivot(shifted)

    lo, lo_status = -maxdeg, status(-maxdeg)
    if lo_status[0] == "psd":
        return _exact_spectrum(a, rows, Fraction(lo), n - lo_status[1], tol)
    if lo_status[0] == "indefinite":
        raise InternalCheckError("adjacency matrix indefinite below its degree bound")
    hi = 0
    hi_status = status(0)
    if hi_status[0] == "psd":
        return _exact_spectrum(a, rows, Fraction(0), n - hi_status[1], tol)
    if hi_status[0] == "pd":
        raise InternalCheckError("adjacency matrix positive definite, impossible")
    while hi - lo > 1:
        mid = (hi + lo) // 2
        st, rank = status(mid)
        if st == "pd":
            lo = mid
        elif st == "psd":
            return _exact_spectrum(a, rows, Fraction(mid), n - rank, tol)
        else:
            hi = mid
    return None  # least eigenvalue lies strictly between two integers


def _exact_spectrum(a, rows, tau, tau_mult, tol):
    n = len(rows)
    vals = np.linalg.eigvalsh(np.array(rows, dtype=float))
    rest = sorted(vals)[tau_mult:]
    pairs = [(tau, tau_mult)]
    for center, mult in _cluster(rest, tol):
        k = round(center)
        if abs(center - k) <= 1e-6 and k != tau:
            shifted = ExactMatrix(
                [[a.data[i][j] - (k if i == j else 0) for j in range(n)] for i in range(n)]
            )
            exact_mult = n - rank_exact(shifted)
            if exact_mult == mult:
                pairs.append((Fraction(k), mult))
                continue
        pairs.append((center, mult))
    return Spectrum(tuple(pairs), tau, tau_mult, "exact")


@dataclass(frozen=True)
class CayleySpectrum:
    """Character spectrum of a Cayley graph on Z_2^n."""

    spec: CayleySpec
    spectrum: Spectrum
    tau_characters: tuple  # group elements whose character eigenvalue is tau

    def tau_eigenvector_matrix(self) -> ExactMatrix:
        n_verts = 1 << self.spec.n
        return ExactMatrix(
            [
                [(-1) ** ((x & v).bit_count() & 1) for v in self.tau_characters]
                for x in range(n_verts)
            ]
        )


def cayley_spectrum(spec: CayleySpec) -> CayleySpectrum:
    """Exact spectrum by character sums: one integer eigenvalue per group element."""
    n_verts = 1 << spec.n
    conn = sorted(spec.connection_set)
    eig = {}
    for v in range(n_verts):
        val = sum(1 if (v & c).bit_count() % 2 == 0 else -1 for c in conn)
        eig.setdefault(val, []).append(v)
    pairs = tuple((Fraction(v), len(eig[v])) for v in sorted(eig))
    tau = min(eig)
    spectrum = Spectrum(pairs, Fraction(tau), len(eig[tau]), "exact")
    return CayleySpectrum(spec, spectrum, tuple(eig[tau]))


@dataclass(frozen=True)
class LeastEigenspace:
    spectrum: Spectrum
    basis: np.ndarray  # n x d, orthonormal columns


def floating_least_eigenspace(a, tol: float = DEFAULT_TOL) -> LeastEigenspace:
    """Floating spectrum with an orthonormal basis of the least eigencluster."""
    if isinstance(a, Graph):
        a = adjacency_matrix(a)
    if isinstance(a, ExactMatrix):
        arr = a.to_float()
    else:
        arr = np.asarray(a, dtype=float)
    if arr.size and not np.allclose(arr, arr.T, atol=1e-12):
        raise ValueError("floating eigenspace needs a symmetric matrix")
    try:
        vals, vecs = np.linalg.eigh(arr)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"eigensolver failed to converge: {e}") from e
    pairs = tuple(_cluster(list(vals), tol))
    d = pairs[0][1]
    spectrum = Spectrum(pairs, pairs[0][0], d, "floating", tol)
    return LeastEigenspace(spectrum, vecs[:, :d])


def graph_spectrum(g: Graph, backend: str = "auto", tol: float = DEFAULT_TOL) -> Spectrum:
    """Spectrum of a graph, exact when the least eigenvalue is integral.

    backend "exact" raises if it is not; "floating" never certifies; "auto"
    prefers exact and silently falls back.
    """
    if backend not in ("auto", "exact", "floating"):
        raise ValueError(f"unknown backend {backend!r}")
    if g.n == 0:
        raise ValueError("empty graph has no spectrum")
    if backend in ("auto", "exact"):
        spec = integer_least_eigenvalue(adjacency_matrix(g), tol)
        if spec is not None:
            return spec
        if backend == "exact":
            raise UnsupportedInputError(
                "exact backend unavailable: least eigenvalue is not an integer"
            )
    return floating_least_eigenspace(g, tol).spectrum
