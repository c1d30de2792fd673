"""Universal completability of least-eigenvalue frameworks.

The decision reduces to a linear system: a symmetric matrix X that vanishes
on closed neighborhoods (diagonal and edges) and satisfies (A - tau I)X = 0
witnesses a non-congruent dominated framework, and the framework is
universally completable exactly when no nonzero such X exists. Unknowns are
indexed by the complement's edges only, so the vanishing constraints are
structural and the system has |E(complement)| columns and n^2 rows.

On the exact path full column rank modulo a word-size prime certifies
dimension zero outright (the modular rank is a lower bound for the rational
one); otherwise kernel vectors are produced and verified exactly. On the
floating path the dimension is read off the singular values, with the
smallest-to-largest ratio reported as the margin of that call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InternalCheckError, UnsupportedInputError
from .exact import (
    DEFAULT_TOL,
    ExactMatrix,
    adjacency_matrix,
    floating_least_eigenspace,
    integer_least_eigenvalue,
    invert,
    is_psd_exact,
    nullspace_fast,
    rank_exact,
)
from .frameworks import Framework, dominates
from .graphs import Graph
from .modular import rank_mod_p

SV_THRESHOLD = 1e-7
NEIGHBORHOOD_MARGIN = 1e-6


@dataclass(frozen=True)
class XSpaceBasis:
    """Basis of the space of symmetric completability witnesses.

    Every element vanishes on the diagonal and on edges and is annihilated
    by the shifted adjacency matrix; dimension zero is exactly universal
    completability of the least-eigenvalue framework. sv_margin (floating
    path only) is the smallest-to-largest singular value ratio of the
    constraint system: large margins mean the rank decision is comfortable.
    """

    graph: Graph
    tau: object
    basis: tuple
    backend: str
    sv_margin: float | None = None
    tau_multiplicity: int | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)


def _complement_pairs(g: Graph):
    return [
        (i, j) for i in range(g.n) for j in range(i + 1, g.n) if not g.has_edge(i, j)
    ]


def _build_system(g: Graph, diag, dtype, pairs, index):
    """Rows of the linear system (A - tau I) X = 0 over complement-edge
    unknowns; diag is the diagonal coefficient (-tau)."""
    n = g.n
    rows = np.zeros((n * n, len(pairs)), dtype=dtype)
    for i in range(n):
        stencil = [(k, 1) for k in g.neighbours(i)] + [(i, diag)]
        for j in range(n):
            r = i * n + j
            for k, coef in stencil:
                if k == j:
                    continue
                t = index.get((k, j) if k < j else (j, k))
                if t is not None:
                    rows[r, t] = coef
    return rows


def _vector_to_matrix(vec, n, pairs, exact):
    if exact:
        entries = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in zip(pairs, vec):
            entries[i][j] = v
            entries[j][i] = v
        return ExactMatrix(entries)
    x = np.zeros((n, n))
    for (i, j), v in zip(pairs, vec):
        x[i, j] = v
        x[j, i] = v
    return x


def xspace(
    g: Graph, backend: str = "auto", tol: float = DEFAULT_TOL, spectrum=None
) -> XSpaceBasis:
    """Solve for all symmetric X with (A+I) o X = 0 and (A - tau I) X = 0.

    The Hadamard constraint is enforced structurally: only complement-edge
    entries are unknowns. Exact-path results are certified (modular rank
    bound for dimension zero, exact verification of every basis matrix
    otherwise). A precomputed Spectrum with exact integer tau (for instance
    from character sums) may be passed in to skip the eigenvalue search.
    """
    if backend not in ("auto", "exact", "floating"):
        raise ValueError(f"unknown backend {backend!r}")
    if g.n == 0:
        raise ValueError("empty graph")
    pairs = _complement_pairs(g)
    index = {pair: t for t, pair in enumerate(pairs)}

    tau = None
    if spectrum is not None and backend != "floating":
        if not isinstance(spectrum.tau, Fraction) or spectrum.tau.denominator != 1:
            raise ValueError("precomputed spectrum must carry an exact integer tau")
        tau = spectrum.tau
    elif backend in ("auto", "exact"):
        spectrum = integer_least_eigenvalue(adjacency_matrix(g), tol)
        if spectrum is None and backend == "exact":
            raise UnsupportedInputError(
                "exact backend unavailable: least eigenvalue is not an integer"
            )
        if spectrum is not None:
            tau = spectrum.tau

    if tau is not None:
        mult = spectrum.tau_multiplicity
        if not pairs:
            return XSpaceBasis(g, tau, (), "exact", None, mult)
        rows = _build_system(g, -int(tau), np.int64, pairs, index)
        rank, _, _ = rank_mod_p(rows)
        if rank == len(pairs):
            return XSpaceBasis(g, tau, (), "exact", None, mult)
        vectors = nullspace_fast([[int(x) for x in row] for row in rows], len(pairs))
        shifted = adjacency_matrix(g) - ExactMatrix.identity(g.n) * tau
        basis = []
        for vec in vectors:
            x = _vector_to_matrix(vec, g.n, pairs, exact=True)
            if not (shifted @ x).is_zero():
                raise InternalCheckError("completability witness fails exact recheck")
            basis.append(x)
        return XSpaceBasis(g, tau, tuple(basis), "exact", None, mult)

    eigsp = floating_least_eigenspace(g, tol)
    tau_f = float(eigsp.spectrum.tau)
    mult_f = eigsp.spectrum.tau_multiplicity
    if not pairs:
        return XSpaceBasis(g, tau_f, (), "floating", None, mult_f)
    rows = _build_system(g, -tau_f, np.float64, pairs, index)
    svals = np.linalg.svd(rows, compute_uv=False)
    smax = float(svals[0]) if len(svals) else 0.0
    if smax == 0.0:
        rank = 0
    else:
        rank = int(np.sum(svals > SV_THRESHOLD * smax))
    margin = float(svals[-1] / smax) if smax > 0 else 0.0
    if rank == len(pairs):
        return XSpaceBasis(g, tau_f, (), "floating", margin, mult_f)
    _, _, vh = np.linalg.svd(rows)
    basis = tuple(
        _vector_to_matrix(vh[r], g.n, pairs, exact=False)
        for r in range(rank, len(pairs))
    )
    return XSpaceBasis(g, tau_f, basis, "floating", margin, mult_f)


@dataclass(frozen=True)
class UCVerdict:
    uc: bool
    witness: XSpaceBasis


def is_universally_completable(
    g: Graph, backend: str = "auto", tol: float = DEFAULT_TOL
) -> UCVerdict:
    """Universal completability of the least-eigenvalue framework.

    True exactly when the witness space is trivial; the basis is carried
    along as the certificate either way. Tensegrities with cables are out of
    scope (the canonical stress argument needs nonnegative edge weights).
    """
    if g.has_cables():
        raise UnsupportedInputError("cable edges are not supported")
    xs = xspace(g, backend, tol)
    return UCVerdict(xs.dim == 0, xs)


# -- the bijection with the reduced space -------------------------------------


def reduced_points(fw: Framework) -> object:
    """A full-column-rank point matrix spanning the framework's eigenspace.

    Floating frameworks already carry an orthonormal basis. Exact ones store
    the projector, whose leftmost rank-many independent columns are selected
    (deterministically) and verified to have full rank.
    """
    if not fw.is_exact():
        pts = np.asarray(fw.points)
        if pts.shape[1] != fw.d:
            raise InternalCheckError("floating framework points are not a column basis")
        return pts
    gram = fw.gram
    cols = []
    for c in range(gram.ncols):
        trial = cols + [c]
        if rank_exact(gram.submatrix(range(gram.nrows), trial)) == len(trial):
            cols.append(c)
        if len(cols) == fw.d:
            break
    if len(cols) != fw.d:
        raise InternalCheckError("projector rank does not match framework dimension")
    return gram.submatrix(range(gram.nrows), cols)


@dataclass(frozen=True)
class RSpaceElement:
    """Symmetric d x d matrix vanishing against point pairs on closed
    neighborhoods: rows(points) p_i satisfy p_i^T R p_j = 0 for adjacent or
    equal i, j."""

    r: object  # ExactMatrix | np.ndarray
    points: object

    def check_membership(self, g: Graph, tol: float = DEFAULT_TOL) -> bool:
        x = _conjugate(self.points, self.r)
        return _vanishes_on_closed_pairs(g, x, tol)


def _conjugate(points, middle):
    if isinstance(points, ExactMatrix):
        return points @ middle @ points.transpose()
    return np.asarray(points) @ np.asarray(middle) @ np.asarray(points).T


def _vanishes_on_closed_pairs(g: Graph, x, tol) -> bool:
    exact = isinstance(x, ExactMatrix)
    for i in range(g.n):
        v = x[i, i] if exact else x[i, i]
        if (v != 0) if exact else (abs(v) > tol):
            return False
    for i, j in g.edges():
        v = x[i, j]
        if (v != 0) if exact else (abs(v) > tol):
            return False
    return True


def phi(elem: RSpaceElement, fw: Framework, tol: float = DEFAULT_TOL):
    """Conjugate a reduced witness up to vertex space: X = P R P^T."""
    if not elem.check_membership(fw.graph, tol):
        raise ValueError("matrix violates the reduced membership conditions")
    return _conjugate(elem.points, elem.r)


def phi_inverse(x, fw: Framework, tol: float = DEFAULT_TOL) -> RSpaceElement:
    """Invert the conjugation: R = (P^T P)^{-1} P^T X P (P^T P)^{-1}.

    With orthonormal floating points the normal matrix is the identity and
    this is plain conjugation by the transpose.
    """
    p = reduced_points(fw)
    if isinstance(p, ExactMatrix):
        if not isinstance(x, ExactMatrix):
            raise ValueError("exact framework needs an exact witness")
        normal_inv = invert(p.transpose() @ p)
        r = normal_inv @ p.transpose() @ x @ p @ normal_inv
    else:
        xf = np.asarray(x, dtype=float)
        pn = np.asarray(p)
        normal_inv = np.linalg.inv(pn.T @ pn)
        r = normal_inv @ pn.T @ xf @ pn @ normal_inv
    return RSpaceElement(r, p)


# -- dominated frameworks ------------------------------------------------------


def _membership_in_xspace(g: Graph, tau, x, tol) -> bool:
    if isinstance(x, ExactMatrix):
        if not x.is_symmetric() or not _vanishes_on_closed_pairs(g, x, tol):
            return False
        shifted = adjacency_matrix(g) - ExactMatrix.identity(g.n) * tau
        return (shifted @ x).is_zero()
    xf = np.asarray(x, dtype=float)
    if not np.allclose(xf, xf.T, atol=tol) or not _vanishes_on_closed_pairs(g, xf, tol):
        return False
    a = adjacency_matrix(g).to_float()
    shifted = a - float(tau) * np.eye(g.n)
    return bool(np.max(np.abs(shifted @ xf)) <= tol * max(1.0, np.max(np.abs(xf))))


def gershgorin_scale(x):
    """1 / (max absolute row sum): guarantees the scaled matrix has least
    eigenvalue >= -1 without ever leaving the rationals."""
    if isinstance(x, ExactMatrix):
        s = max((sum(abs(v) for v in row) for row in x.data), default=Fraction(0))
        return None if s == 0 else Fraction(1) / s
    s = float(np.max(np.sum(np.abs(np.asarray(x, dtype=float)), axis=1), initial=0.0))
    return None if s == 0.0 else 1.0 / s


def dominated_frameworks(p: Framework, x, c=None, tol: float = DEFAULT_TOL) -> Framework:
    """The framework whose Gram matrix is gram(p) + c*x.

    x must be a completability witness; c defaults to the Gershgorin scale
    of x, which keeps the sum positive semidefinite. The result is verified
    PSD and verified to be dominated by p with equality on the diagonal and
    on edges.
    """
    if p.tau is None:
        raise ValueError("framework carries no spectral data")
    if not _membership_in_xspace(p.graph, p.tau, x, tol):
        raise ValueError("matrix is not a completability witness for this graph")
    if c is None:
        c = gershgorin_scale(x)
        if c is None:
            return p  # x = 0
    if p.is_exact():
        c = Fraction(c)
        if c <= 0:
            raise ValueError("scale must be positive")
        gram = p.gram + x * c
        if not is_psd_exact(gram):
            raise InternalCheckError("scaled witness broke positive semidefiniteness")
    else:
        c = float(c)
        if c <= 0:
            raise ValueError("scale must be positive")
        gram = np.asarray(p.gram) + c * np.asarray(x, dtype=float)
        w = np.linalg.eigvalsh(gram)
        if w[0] < -1e-9 * max(1.0, float(w[-1])):
            raise InternalCheckError("scaled witness broke positive semidefiniteness")
    q = Framework(p.graph, gram, p.backend, None, p.tau, p.tau_multiplicity)
    if not dominates(p, q):
        raise InternalCheckError("dominated framework fails the domination check")
    eps = 0 if p.is_exact() else 1e-9
    for i in range(p.n):
        if abs(q.entry(i, i) - p.entry(i, i)) > eps:
            raise InternalCheckError("dominated framework changed a diagonal entry")
    for i, j in p.graph.edges():
        if abs(q.entry(i, j) - p.entry(i, j)) > eps:
            raise InternalCheckError("dominated framework changed an edge entry")
    return q


# -- fast sufficient conditions ------------------------------------------------


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    failed_vertex: int | None = None
    witness: object = None


def neighborhood_condition(
    g: Graph, backend: str = "auto", tol: float = DEFAULT_TOL
) -> ConditionReport:
    """Punctured-neighborhood test: deleting any closed neighborhood must
    leave a graph whose least eigenvalue strictly exceeds tau.

    Holding implies universal completability; failing implies nothing.
    Exact comparison when both eigenvalues are integral, floating with a
    fixed margin otherwise. Empty punctured graphs count as eigenvalue zero.
    """
    from .exact import graph_spectrum

    tau = graph_spectrum(g, backend, tol).tau
    for v in range(g.n):
        h = _punctured(g, v)
        if h.n == 0:
            lam = Fraction(0)
        else:
            lam = graph_spectrum(h, "auto" if backend != "floating" else "floating", tol).tau
        if isinstance(lam, Fraction) and isinstance(tau, Fraction):
            ok = lam > tau
        else:
            ok = float(lam) > float(tau) + NEIGHBORHOOD_MARGIN
        if not ok:
            return ConditionReport(False, failed_vertex=v)
    return ConditionReport(True)


def _punctured(g: Graph, v: int) -> Graph:
    from .graphs import induced_delete_closed_nbhd

    return induced_delete_closed_nbhd(g, v)


def clique_condition(
    g: Graph, clique, backend: str = "auto", tol: float = DEFAULT_TOL
) -> bool:
    """Invertibility of the shifted adjacency matrix outside a clique.

    An invertible principal submatrix of A - tau I on the clique's
    complement forces every completability witness to vanish, so holding
    implies universal completability. The empty complement is vacuously
    invertible.
    """
    from .exact import graph_spectrum

    clique = sorted(set(clique))
    for a in range(len(clique)):
        for b in range(a + 1, len(clique)):
            if not g.has_edge(clique[a], clique[b]):
                raise ValueError(f"vertices {clique[a]} and {clique[b]} are not adjacent")
    rest = [v for v in range(g.n) if v not in set(clique)]
    if not rest:
        return True
    tau = graph_spectrum(g, backend, tol).tau
    if isinstance(tau, Fraction):
        a = adjacency_matrix(g)
        sub = (a - ExactMatrix.identity(g.n) * tau).submatrix(rest, rest)
        return rank_exact(sub) == len(rest)
    af = adjacency_matrix(g).to_float() - float(tau) * np.eye(g.n)
    sub = af[np.ix_(rest, rest)]
    svals = np.linalg.svd(sub, compute_uv=False)
    return bool(svals[-1] > SV_THRESHOLD * max(1.0, float(svals[0])))


def clique_condition_any(
    g: Graph, backend: str = "auto", tol: float = DEFAULT_TOL
):
    """First maximal clique (largest, then lexicographic) whose complement
    passes the invertibility test, or (False, None)."""
    from .graphs import maximal_cliques

    for clique in sorted(maximal_cliques(g), key=lambda c: (-len(c), c)):
        if clique_condition(g, clique, backend, tol):
            return True, tuple(clique)
    return False, None
