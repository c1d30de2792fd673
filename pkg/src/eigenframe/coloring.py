"""Vector colorings from least-eigenvalue frameworks.

A vector t-coloring places unit vectors on the vertices with inner products
at most -1/(t-1) across every edge, strictly when equality holds on all of
them. For 1-walk-regular graphs the projector onto the least eigenspace has
constant diagonal d/n and constant edge entries, so scaling it by n/d gives
a strict coloring that is in fact optimal, and the graph is uniquely vector
colorable exactly when the completability witness space is trivial. When it
is not, adding a scaled witness to the projector yields a second optimal
coloring with the same value, which is the certificate this module emits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InternalCheckError
from .exact import (
    DEFAULT_TOL,
    ExactMatrix,
    adjacency_matrix,
    integer_least_eigenvalue,
    is_psd_exact,
)
from .completability import XSpaceBasis, dominated_frameworks, xspace
from .frameworks import Framework, least_eigenvalue_framework
from .graphs import STRUT, Graph

EDGE_TOL = 1e-9

VALID_STRICT = "valid-strict"
VALID = "valid"
INVALID = "invalid"


@dataclass(frozen=True)
class VectorColoring:
    graph: Graph
    gram: object  # ExactMatrix | np.ndarray
    t: object  # Fraction | float
    strict: bool
    backend: str


@dataclass(frozen=True)
class OneWalkRegularCertificate:
    """Walk-count constants a_k (closed walks) and b_k (edge walks) for
    k = 0..k_max, with the first counterexample when the graph fails."""

    ok: bool
    a_seq: tuple
    b_seq: tuple
    k_max: int
    failure: tuple | None = None  # (k, i, j) entry breaking constancy

    def describe_failure(self) -> str:
        if self.ok:
            return "regular walk counts at every checked power"
        k, i, j = self.failure
        where = f"vertex {i}" if i == j else f"edge ({i}, {j})"
        return f"walk counts of length {k} break at {where}"


def is_one_walk_regular(g: Graph) -> OneWalkRegularCertificate:
    """Check that A^k has constant diagonal and constant edge entries for
    every power up to the minimal-polynomial bound.

    Powers beyond (distinct eigenvalues - 1) are linear combinations of the
    checked ones, so constancy there is implied. Without an exact spectrum
    the bound falls back to n - 1.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    a = adjacency_matrix(g)
    spectrum = integer_least_eigenvalue(a)
    k_max = (spectrum.distinct_count - 1) if spectrum is not None else g.n - 1
    k_max = max(k_max, 1)
    edges = g.edges()
    power = ExactMatrix.identity(g.n)
    a_seq, b_seq = [], []
    for k in range(k_max + 1):
        if k:
            power = power @ a
        diag = power[0, 0]
        for i in range(1, g.n):
            if power[i, i] != diag:
                return OneWalkRegularCertificate(
                    False, tuple(a_seq), tuple(b_seq), k, (k, i, i)
                )
        edge_val = power[edges[0][0], edges[0][1]] if edges else Fraction(0)
        for i, j in edges:
            if power[i, j] != edge_val:
                return OneWalkRegularCertificate(
                    False, tuple(a_seq), tuple(b_seq), k, (k, i, j)
                )
        a_seq.append(diag)
        b_seq.append(edge_val)
    return OneWalkRegularCertificate(True, tuple(a_seq), tuple(b_seq), k_max)


def struts_tensegrity(g: Graph) -> Graph:
    """Every edge relabeled as a strut (idempotent)."""
    return g.with_labels({e: STRUT for e in g.edges()})


@dataclass(frozen=True)
class ColoringVerdict:
    status: str
    violation: tuple | None = None  # (kind, i, j)

    def __bool__(self):
        return self.status != INVALID


def validate_coloring(g: Graph, gram, t, tol: float = EDGE_TOL) -> ColoringVerdict:
    """Unit diagonal, positive semidefiniteness, and the edge bound, in that
    order, reporting the first violation.

    t must exceed 1 whenever the graph has edges (the bound -1/(t-1) is
    meaningless otherwise); edgeless graphs accept t = 1.
    """
    exact = isinstance(gram, ExactMatrix) and isinstance(t, (Fraction, int))
    if exact:
        t = Fraction(t)
        if t <= 1 and (g.num_edges() > 0 or t < 1):
            raise ValueError("coloring value must exceed 1")
    else:
        tf = float(t)
        if tf <= 1 and (g.num_edges() > 0 or tf < 1):
            raise ValueError("coloring value must exceed 1")
    if exact:
        for i in range(g.n):
            if gram[i, i] != 1:
                return ColoringVerdict(INVALID, ("diagonal", i, i))
        if not is_psd_exact(gram):
            return ColoringVerdict(INVALID, ("psd", -1, -1))
        if g.num_edges() == 0:
            return ColoringVerdict(VALID_STRICT)
        bound = Fraction(-1) / (t - 1)
        strict = True
        for i, j in g.edges():
            if gram[i, j] > bound:
                return ColoringVerdict(INVALID, ("edge", i, j))
            if gram[i, j] != bound:
                strict = False
        return ColoringVerdict(VALID_STRICT if strict else VALID)
    gf = gram.to_float() if isinstance(gram, ExactMatrix) else np.asarray(gram, dtype=float)
    tf = float(t)
    for i in range(g.n):
        if abs(gf[i, i] - 1.0) > tol:
            return ColoringVerdict(INVALID, ("diagonal", i, i))
    w = np.linalg.eigvalsh(gf)
    if w[0] < -tol * max(1.0, float(w[-1])):
        return ColoringVerdict(INVALID, ("psd", -1, -1))
    if g.num_edges() == 0:
        return ColoringVerdict(VALID_STRICT)
    bound = -1.0 / (tf - 1.0)
    strict = True
    for i, j in g.edges():
        if gf[i, j] > bound + tol:
            return ColoringVerdict(INVALID, ("edge", i, j))
        if abs(gf[i, j] - bound) > tol:
            strict = False
    return ColoringVerdict(VALID_STRICT if strict else VALID)


def _require_1wr(g: Graph) -> OneWalkRegularCertificate:
    cert = is_one_walk_regular(g)
    if not cert.ok:
        raise ValueError(f"graph is not 1-walk-regular: {cert.describe_failure()}")
    return cert


def optimal_vector_coloring_1wr(
    g: Graph, backend: str = "auto", tol: float = DEFAULT_TOL
) -> VectorColoring:
    """The least-eigenspace coloring of a 1-walk-regular graph.

    Gram matrix (n/d) times the eigenprojector; value t = 1 - r/tau with r
    the common degree. Strictness is rechecked rather than assumed.
    """
    _require_1wr(g)
    if g.num_edges() == 0:
        gram = ExactMatrix.identity(g.n)
        return VectorColoring(g, gram, Fraction(1), True, "exact")
    fw = least_eigenvalue_framework(g, backend, tol)
    r = g.degree(0)
    if fw.is_exact():
        t = 1 - Fraction(r) / fw.tau
        gram = fw.gram * Fraction(g.n, fw.d)
    else:
        t = 1.0 - r / float(fw.tau)
        gram = np.asarray(fw.gram) * (g.n / fw.d)
    verdict = validate_coloring(g, gram, t)
    if verdict.status != VALID_STRICT:
        raise InternalCheckError(
            f"eigenspace coloring failed its own validation: {verdict}"
        )
    return VectorColoring(g, gram, t, True, fw.backend)


@dataclass(frozen=True)
class UVCResult:
    uvc: bool
    coloring: VectorColoring
    witness_space: XSpaceBasis | None
    alternate: VectorColoring | None = None
    reason: str | None = None

    @property
    def x_dim(self):
        return self.witness_space.dim if self.witness_space is not None else None


def is_uniquely_vector_colorable_1wr(
    g: Graph, backend: str = "auto", tol: float = DEFAULT_TOL
) -> UVCResult:
    """Decide unique vector colorability of a 1-walk-regular graph.

    Unique exactly when the graph is connected and the completability
    witness space is trivial. Negative verdicts come with a second optimal
    coloring whenever one can be built: the eigenspace coloring plus a
    scaled witness, which keeps the diagonal, the edge values, and hence the
    value t.
    """
    _require_1wr(g)
    coloring = optimal_vector_coloring_1wr(g, backend, tol)
    if g.num_edges() == 0:
        if g.n == 1:
            return UVCResult(True, coloring, None)
        ones = ExactMatrix([[1] * g.n for _ in range(g.n)])
        alt = VectorColoring(g, ones, Fraction(1), True, "exact")
        return UVCResult(False, coloring, None, alt, "no edges, any unit vectors do")
    xs = xspace(g, backend, tol)
    if g.is_connected() and xs.dim == 0:
        return UVCResult(True, coloring, xs)
    reason = None if g.is_connected() else "disconnected, components move independently"
    alternate = None
    if xs.dim > 0:
        alternate = _second_coloring(g, coloring, xs, tol)
    return UVCResult(False, coloring, xs, alternate, reason)


def _second_coloring(g, coloring, xs, tol) -> VectorColoring:
    fw = least_eigenvalue_framework(g, xs.backend, tol)
    shifted = dominated_frameworks(fw, xs.basis[0], tol=tol)
    if fw.is_exact():
        scale = Fraction(g.n, fw.d)
    else:
        scale = g.n / fw.d
    alt = shifted.rescaled(scale)
    verdict = validate_coloring(g, alt.gram, coloring.t)
    if verdict.status != VALID_STRICT:
        raise InternalCheckError("second coloring failed validation")
    if fw.is_exact() and isinstance(coloring.gram, ExactMatrix):
        if alt.gram == coloring.gram:
            raise InternalCheckError("second coloring equals the first")
    return VectorColoring(g, alt.gram, coloring.t, True, alt.backend)
