"""Frameworks on tensegrity graphs: Gram matrices, domination, stresses.

A framework assigns a vector to each vertex; the Gram matrix of those
vectors is the object everything here works with, since congruence (equal
Grams) is the equivalence that matters. The rows of any rank factorization
serve as concrete points. On the exact path the least-eigenvalue framework
is represented by the projector onto the least eigenspace: the projector is
rational whenever the eigenvalue is integral, while an orthonormal point
matrix generally is not, and the two differ only by congruence.

Domination compares two frameworks on the same tensegrity graph entrywise:
equal on the diagonal and on bars, >= on cables, <= on struts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InternalCheckError, UnsupportedInputError
from .exact import (
    DEFAULT_TOL,
    ExactMatrix,
    Spectrum,
    adjacency_matrix,
    floating_least_eigenspace,
    integer_least_eigenvalue,
    is_psd_exact,
    nullspace,
    projector_onto_nullspace,
    rank_exact,
)
from .graphs import (
    BAR,
    CABLE,
    STRUT,
    Graph,
    kneser,
    kneser_vertices,
    q_kneser,
    q_kneser_vertices,
)
from .modular import gaussian_binomial, rank_mod_q, subspaces_mod_q
from .serialize import gram_tokens, number_token

GRAM_TOL = 1e-9
FACTOR_TOL = 1e-10


@dataclass(frozen=True)
class Framework:
    """Vectors on the vertices of a tensegrity graph, up to congruence.

    gram is the source of truth. points, when present, is a rank
    factorization with gram = points @ points.T (checked at construction);
    it is dropped by operations that cannot maintain it. tau and
    tau_multiplicity record the spectral data of the construction when there
    is one. d is the rank of the Gram matrix.
    """

    graph: Graph
    gram: object  # ExactMatrix | np.ndarray
    backend: str
    points: object = None
    tau: object = None
    tau_multiplicity: int | None = None
    d: int | None = None

    def __post_init__(self):
        n = self.graph.n
        exact = isinstance(self.gram, ExactMatrix)
        if exact:
            if self.gram.shape != (n, n):
                raise ValueError("gram size does not match the graph")
            if not self.gram.is_symmetric():
                raise ValueError("gram matrix must be symmetric")
        else:
            g = np.asarray(self.gram)
            if g.shape != (n, n):
                raise ValueError("gram size does not match the graph")
        if self.points is not None:
            if exact:
                if self.points @ self.points.transpose() != self.gram:
                    raise InternalCheckError("points do not factor the gram matrix")
            else:
                pp = np.asarray(self.points) @ np.asarray(self.points).T
                if not np.allclose(pp, self.gram, atol=FACTOR_TOL):
                    raise InternalCheckError("points do not factor the gram matrix")
        if self.d is None:
            object.__setattr__(self, "d", _gram_rank(self.gram, self.points))

    @property
    def n(self):
        return self.graph.n

    def is_exact(self) -> bool:
        return isinstance(self.gram, ExactMatrix)

    def entry(self, i, j):
        return self.gram[i, j] if self.is_exact() else float(np.asarray(self.gram)[i, j])

    def rescaled(self, factor) -> "Framework":
        """Scale the Gram matrix by a positive factor; points are dropped."""
        if self.is_exact():
            f = Fraction(factor)
            if f <= 0:
                raise ValueError("scale factor must be positive")
            gram = self.gram * f
        else:
            if float(factor) <= 0:
                raise ValueError("scale factor must be positive")
            gram = np.asarray(self.gram) * float(factor)
        return Framework(
            self.graph, gram, self.backend, None, self.tau, self.tau_multiplicity, self.d
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "backend": self.backend,
            "gram": gram_tokens(self.gram),
            "tau": None if self.tau is None else number_token(self.tau),
            "tau_multiplicity": self.tau_multiplicity,
        }


def _gram_rank(gram, points) -> int:
    if isinstance(gram, ExactMatrix):
        if points is not None and isinstance(points, ExactMatrix):
            return rank_exact(points)  # rank(PP^T) = rank(P), and P is thinner
        return rank_exact(gram)
    return int(np.linalg.matrix_rank(np.asarray(gram)))


def least_eigenvalue_framework(
    g: Graph, backend: str = "auto", tol: float = DEFAULT_TOL
) -> Framework:
    """The framework spanned by the least adjacency eigenspace.

    Exact path (integral least eigenvalue): the Gram matrix is the projector
    onto the eigenspace, computed exactly, and the projector's own rows are
    the points (idempotence makes them a valid factorization). Floating
    path: rows of an orthonormal eigenbasis.
    """
    if g.n == 0:
        raise ValueError("empty graph has no framework")
    if backend not in ("auto", "exact", "floating"):
        raise ValueError(f"unknown backend {backend!r}")
    a = adjacency_matrix(g)
    if backend in ("auto", "exact"):
        spectrum = integer_least_eigenvalue(a, tol)
        if spectrum is None:
            if backend == "exact":
                raise UnsupportedInputError(
                    "exact backend unavailable: least eigenvalue is not an integer"
                )
        else:
            tau = spectrum.tau
            proj = projector_onto_nullspace(a - ExactMatrix.identity(g.n) * tau)
            return Framework(
                g, proj, "exact", proj, tau, spectrum.tau_multiplicity,
                spectrum.tau_multiplicity,
            )
    eigsp = floating_least_eigenspace(a, tol)
    basis = eigsp.basis
    return Framework(
        g,
        basis @ basis.T,
        "floating",
        basis,
        eigsp.spectrum.tau,
        eigsp.spectrum.tau_multiplicity,
        eigsp.spectrum.tau_multiplicity,
    )


def _incidence_framework(g: Graph, p: ExactMatrix) -> Framework:
    for i in range(p.nrows):
        if sum(p.row(i)) != 0:
            raise InternalCheckError("incidence framework rows must sum to zero")
    spectrum = integer_least_eigenvalue(adjacency_matrix(g))
    if spectrum is None:
        raise InternalCheckError("incidence framework graph must have integral least eigenvalue")
    return Framework(
        g, p @ p.transpose(), "exact", p, spectrum.tau, spectrum.tau_multiplicity, rank_exact(p)
    )


def kneser_framework(n: int, r: int) -> Framework:
    """Weighted subset-element incidence framework on the Kneser graph.

    Entry alpha = r - n on (subset, member) pairs and beta = r elsewhere, so
    each row sums to zero and the points live in the hyperplane orthogonal
    to the all-ones vector.
    """
    if r < 1 or n < 2 * r + 1:
        raise UnsupportedInputError(f"kneser framework needs n >= 2r+1, got n={n}, r={r}")
    sets = [frozenset(v) for v in kneser_vertices(n, r)]
    p = ExactMatrix([[r - n if e in s else r for e in range(n)] for s in sets])
    return _incidence_framework(kneser(n, r), p)


def qkneser_framework(q: int, n: int, r: int) -> Framework:
    """Subspace-line incidence framework on the q-Kneser graph.

    Entry alpha = [r]_q - [n]_q on (subspace, contained line) pairs and
    beta = [r]_q on the rest; [k]_q counts the lines of a k-space, so each
    row again sums to zero.
    """
    if r < 1 or n < 2 * r + 1:
        raise UnsupportedInputError(f"q-kneser framework needs n >= 2r+1, got n={n}, r={r}")
    g = q_kneser(q, n, r)
    verts = q_kneser_vertices(q, n, r)
    lines = sorted(subspaces_mod_q(q, n, 1))
    line_count = gaussian_binomial(r, 1, q)
    alpha = line_count - gaussian_binomial(n, 1, q)
    beta = line_count

    def contains(space, line):
        return rank_mod_q(list(space) + list(line), q) == r

    p = ExactMatrix(
        [[alpha if contains(s, ln) else beta for ln in lines] for s in verts]
    )
    return _incidence_framework(g, p)


@dataclass(frozen=True)
class StressMatrix:
    """A symmetric matrix stressing a framework, with its five defining
    checks exposed individually: positive semidefinite, supported on edges,
    correctly signed on struts and cables, annihilating the points, and of
    corank equal to the span dimension."""

    z: ExactMatrix
    framework: Framework

    def condition_psd(self) -> bool:
        return is_psd_exact(self.z)

    def condition_support(self) -> bool:
        g = self.framework.graph
        return all(
            self.z[i, j] == 0
            for i in range(g.n)
            for j in range(i + 1, g.n)
            if not g.has_edge(i, j)
        )

    def condition_signs(self) -> bool:
        g = self.framework.graph
        for i, j in g.edges():
            label = g.label_of(i, j)
            if label == STRUT and self.z[i, j] < 0:
                return False
            if label == CABLE and self.z[i, j] > 0:
                return False
        return True

    def condition_annihilates(self) -> bool:
        fw = self.framework
        if fw.points is not None and isinstance(fw.points, ExactMatrix):
            return (self.z @ fw.points).is_zero()
        # col span of the gram equals the span of the points
        return (self.z @ fw.gram).is_zero()

    def condition_corank(self) -> bool:
        return self.z.nrows - rank_exact(self.z) == self.framework.d

    def verify(self) -> "StressMatrix":
        checks = {
            "psd": self.condition_psd,
            "support": self.condition_support,
            "signs": self.condition_signs,
            "annihilates": self.condition_annihilates,
            "corank": self.condition_corank,
        }
        failed = [name for name, fn in checks.items() if not fn()]
        if failed:
            raise InternalCheckError(f"stress matrix conditions failed: {', '.join(failed)}")
        return self


def canonical_stress(g: Graph, framework: Framework | None = None) -> StressMatrix:
    """The shifted adjacency matrix as a stress for the least-eigenvalue
    framework: subtracting the least eigenvalue from the diagonal gives a
    PSD matrix supported on edges whose kernel is exactly the eigenspace.

    Requires an integral least eigenvalue and a cable-free graph; all five
    conditions are verified before returning.
    """
    if g.has_cables():
        raise UnsupportedInputError("canonical stress is undefined with cable edges")
    if framework is None:
        framework = least_eigenvalue_framework(g, backend="exact")
    if not framework.is_exact():
        raise UnsupportedInputError("canonical stress needs the exact backend")
    z = adjacency_matrix(g) - ExactMatrix.identity(g.n) * framework.tau
    return StressMatrix(z, framework).verify()


def _comparable(p: Framework, q: Framework):
    if p.is_exact() and q.is_exact():
        return lambda i, j: (p.gram[i, j], q.gram[i, j]), True
    pg = p.gram.to_float() if p.is_exact() else np.asarray(p.gram, dtype=float)
    qg = q.gram.to_float() if q.is_exact() else np.asarray(q.gram, dtype=float)
    return lambda i, j: (pg[i, j], qg[i, j]), False


def dominates(p: Framework, q: Framework, tol: float = GRAM_TOL) -> bool:
    """Entrywise Gram comparison on the shared tensegrity graph: equality on
    the diagonal and bars, >= on cables, <= on struts."""
    if p.graph != q.graph:
        raise ValueError("frameworks live on different tensegrity graphs")
    at, exact = _comparable(p, q)
    eps = 0 if exact else tol
    for i in range(p.n):
        a, b = at(i, i)
        if abs(b - a) > eps:
            return False
    for i, j in p.graph.edges():
        a, b = at(i, j)
        label = p.graph.label_of(i, j)
        if label == BAR and abs(b - a) > eps:
            return False
        if label == CABLE and b < a - eps:
            return False
        if label == STRUT and b > a + eps:
            return False
    return True


def congruent(p: Framework, q: Framework, tol: float = GRAM_TOL) -> bool:
    if p.n != q.n:
        raise ValueError("frameworks have different sizes")
    if p.is_exact() and q.is_exact():
        return p.gram == q.gram
    at, _ = _comparable(p, q)
    return all(
        abs(at(i, j)[0] - at(i, j)[1]) <= tol for i in range(p.n) for j in range(p.n)
    )
