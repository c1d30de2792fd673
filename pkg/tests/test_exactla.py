"""Exact linear algebra: elimination, lifting, spectra, PSD certificates.

The fast nullspace (modular rank bound plus p-adic solve) and the plain
fraction-arithmetic elimination are independent routes to the same answers,
so they are run against each other on randomized inputs throughout.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from corpus import connected_graphs
from eigenframe.exact import (
    ExactMatrix,
    adjacency_matrix,
    cayley_spectrum,
    charpoly,
    floating_least_eigenspace,
    graph_spectrum,
    integer_least_eigenvalue,
    invert,
    is_psd_exact,
    nullspace,
    nullspace_fast,
    projector_onto_nullspace,
    psd_rank_pivot,
    rank_exact,
)
from eigenframe.errors import UnsupportedInputError
from eigenframe.graphs import CayleySpec, cayley_z2, cycle, from_edges, kneser
from eigenframe.modular import (
    gaussian_binomial,
    gf2_rank,
    gf2_span,
    rank_mod_p,
    rank_mod_q,
    rref_mod_q,
    subspaces_mod_q,
)


def _random_int_matrix(rng, nrows, ncols, lo=-5, hi=5):
    return [[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)]


def test_exact_matrix_arithmetic():
    a = ExactMatrix([[1, 2], [3, 4]])
    b = ExactMatrix([[0, 1], [1, 0]])
    assert (a + b) == ExactMatrix([[1, 3], [4, 4]])
    assert (a - b) == ExactMatrix([[1, 1], [2, 4]])
    assert (a * Fraction(1, 2)) == ExactMatrix([["1/2", 1], ["3/2", 2]])
    assert (a @ b) == ExactMatrix([[2, 1], [4, 3]])
    assert a.transpose() == ExactMatrix([[1, 3], [2, 4]])
    assert a.trace() == 5
    assert a[1, 0] == 3
    assert not a.is_symmetric() and b.is_symmetric()
    assert ExactMatrix.zeros(2, 3).is_zero()
    assert ExactMatrix.identity(3).trace() == 3


def test_exact_matrix_rejects_ragged_rows():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])


def test_rank_against_numpy():
    rng = random.Random(11)
    for _ in range(60):
        nrows, ncols = rng.randint(1, 7), rng.randint(1, 7)
        rows = _random_int_matrix(rng, nrows, ncols)
        m = ExactMatrix(rows)
        assert rank_exact(m) == np.linalg.matrix_rank(np.array(rows, dtype=float))


def test_rank_of_constructed_deficiency():
    # third row is the sum of the first two
    m = ExactMatrix([[1, 2, 3], [4, 5, 6], [5, 7, 9]])
    assert rank_exact(m) == 2


def test_nullspace_is_a_kernel_basis():
    rng = random.Random(23)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        m = ExactMatrix(_random_int_matrix(rng, nrows, ncols))
        basis = nullspace(m)
        assert len(basis) == ncols - rank_exact(m)
        for v in basis:
            col = ExactMatrix([[x] for x in v])
            assert (m @ col).is_zero()
        if basis:
            stacked = ExactMatrix([list(v) for v in basis])
            assert rank_exact(stacked) == len(basis)


def test_fast_nullspace_agrees_with_plain_elimination():
    rng = random.Random(31)
    for trial in range(30):
        nrows, ncols = rng.randint(2, 10), rng.randint(2, 10)
        rows = _random_int_matrix(rng, nrows, ncols, -9, 9)
        if trial % 3 == 0:  # force rank deficiency
            rows.append([a + b for a, b in zip(rows[0], rows[-1])])
        plain = nullspace(ExactMatrix(rows))
        fast = nullspace_fast([list(r) for r in rows], ncols)
        assert len(fast) == len(plain)
        assert sorted(map(tuple, fast)) == sorted(map(tuple, plain))


def test_fast_nullspace_with_large_entries():
    # entries big enough that the p-adic solve must lift several digits
    rng = random.Random(47)
    rows = _random_int_matrix(rng, 12, 15, -10**6, 10**6)
    fast = nullspace_fast([list(r) for r in rows], 15)
    plain = nullspace(ExactMatrix(rows))
    assert sorted(map(tuple, fast)) == sorted(map(tuple, plain))


def test_invert():
    a = ExactMatrix([[2, 1], [1, 1]])
    assert a @ invert(a) == ExactMatrix.identity(2)
    with pytest.raises(ValueError):
        invert(ExactMatrix([[1, 2], [2, 4]]))


def test_projector_onto_nullspace():
    m = ExactMatrix([[1, 1, 0], [0, 0, 0]])
    p = projector_onto_nullspace(m)
    assert p @ p == p
    assert (m @ p).is_zero()
    assert p.is_symmetric()
    assert p.trace() == 3 - rank_exact(m)


def test_charpoly_triangle():
    # eigenvalues of the triangle are 2, -1, -1
    coeffs = charpoly(adjacency_matrix(from_edges(3, [(0, 1), (0, 2), (1, 2)])))
    assert list(coeffs) == [1, 0, -3, -2]


def test_charpoly_against_numpy():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 5)
        rows = _random_int_matrix(rng, n, n, -3, 3)
        coeffs = [float(c) for c in charpoly(ExactMatrix(rows))]
        expected = np.poly(np.array(rows, dtype=float))
        assert np.allclose(coeffs, expected, atol=1e-6)


def test_psd_certificates_against_numpy():
    rng = random.Random(17)
    for _ in range(50):
        n = rng.randint(1, 6)
        b = np.array(_random_int_matrix(rng, n, rng.randint(1, n)), dtype=object)
        gram = (b @ b.T).tolist()
        if rng.random() < 0.5:
            k = rng.randrange(n)
            gram[k][k] -= rng.randint(1, 4)  # usually breaks semidefiniteness
        m = ExactMatrix(gram)
        eigs = np.linalg.eigvalsh(m.to_float())
        truly_psd = bool(eigs.min() > -1e-9)
        assert is_psd_exact(m) == truly_psd
        kind, rank = psd_rank_pivot([[int(x) for x in row] for row in gram])
        assert (kind in ("psd", "pd")) == truly_psd
        if kind in ("psd", "pd"):
            assert rank == np.linalg.matrix_rank(m.to_float())


def test_integer_least_eigenvalue_on_corpus():
    for g, _ in connected_graphs(max_n=6, min_n=2):
        spec = integer_least_eigenvalue(adjacency_matrix(g))
        float_min = float(np.linalg.eigvalsh(adjacency_matrix(g).to_float()).min())
        if spec is None:
            assert abs(float_min - round(float_min)) > 1e-9
        else:
            assert isinstance(spec.tau, Fraction) and spec.tau.denominator == 1
            assert abs(float(spec.tau) - float_min) < 1e-9
            assert spec.n == g.n
            vals = sorted(np.linalg.eigvalsh(adjacency_matrix(g).to_float()))
            # exact multiplicity must match the floating cluster at tau
            assert spec.tau_multiplicity == sum(1 for v in vals if abs(v - float_min) < 1e-7)


def test_graph_spectrum_backends():
    pet = kneser(5, 2)
    s = graph_spectrum(pet, backend="exact")
    assert s.pairs == ((Fraction(-2), 4), (Fraction(1), 5), (Fraction(3), 1))
    with pytest.raises(UnsupportedInputError):
        graph_spectrum(cycle(5), backend="exact")
    f = graph_spectrum(cycle(5), backend="floating")
    assert f.backend == "floating"
    assert abs(f.tau - 2 * np.cos(4 * np.pi / 5)) < 1e-9
    assert f.tau_multiplicity == 2
    auto = graph_spectrum(cycle(5), backend="auto")
    assert auto.backend == "floating"


def test_cayley_spectrum_against_dense_route():
    # every connection set on up to 4 group generators, both spectra
    for n in range(1, 5):
        rng = random.Random(n)
        all_sets = [s for s in range(1, 1 << ((1 << n) - 1))]
        for mask in rng.sample(all_sets, min(40, len(all_sets))):
            conn = tuple(i + 1 for i in range((1 << n) - 1) if mask >> i & 1)
            if not conn:
                continue
            spec = CayleySpec(n, conn)
            cs = cayley_spectrum(spec)
            dense = graph_spectrum(cayley_z2(spec), backend="exact")
            assert cs.spectrum.pairs == dense.pairs
            # character vectors are actual eigenvectors for tau
            g = cayley_z2(spec)
            a = adjacency_matrix(g)
            v = cs.tau_eigenvector_matrix()
            assert a @ v == v * cs.spectrum.tau


def test_floating_eigenspace_orthonormal():
    les = floating_least_eigenspace(adjacency_matrix(kneser(5, 2)))
    b = les.basis
    assert b.shape == (10, 4)
    assert np.allclose(b.T @ b, np.eye(4), atol=1e-9)


def test_gf2_rank_and_span():
    assert gf2_rank([1, 2, 4]) == 3
    assert gf2_rank([1, 2, 3]) == 2
    assert gf2_rank([]) == 0
    assert gf2_span([1, 2]) == {0, 1, 2, 3}
    assert len(gf2_span([1, 2, 4])) == 8


def test_rank_mod_p_lower_bounds_rational_rank():
    rng = random.Random(41)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 7), rng.randint(1, 7)
        rows = _random_int_matrix(rng, nrows, ncols)
        exact = rank_exact(ExactMatrix(rows))
        modular, prows, pcols = rank_mod_p(rows)
        assert modular <= exact
        assert modular == exact  # generic small entries never hit the prime
        assert len(prows) == modular == len(pcols)
    # a matrix that genuinely drops rank modulo the chosen prime
    assert rank_mod_p([[2_147_483_647]])[0] == 0
    assert rank_exact(ExactMatrix([[2_147_483_647]])) == 1


def test_rref_mod_q():
    rows, pivots = rref_mod_q([[2, 4], [1, 3]], 5)
    assert pivots == [0, 1]
    assert rows[0][0] == 1 and rows[1][1] == 1 and rows[0][1] == 0
    assert rank_mod_q([[1, 1], [1, 1]], 2) == 1


def test_gaussian_binomials():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(5, 2, 2) == 155
    assert gaussian_binomial(4, 2, 3) == 130
    assert len(list(subspaces_mod_q(2, 3, 1))) == 7
    assert len(list(subspaces_mod_q(2, 4, 2))) == 35
