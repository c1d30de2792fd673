"""Least-eigenvalue frameworks, named constructions, stress matrices."""

from fractions import Fraction

import numpy as np
import pytest

from corpus import connected_graphs
from eigenframe.errors import InternalCheckError, UnsupportedInputError
from eigenframe.exact import ExactMatrix, adjacency_matrix, graph_spectrum, rank_exact
from eigenframe.frameworks import (
    Framework,
    StressMatrix,
    canonical_stress,
    congruent,
    dominates,
    kneser_framework,
    least_eigenvalue_framework,
    qkneser_framework,
)
from eigenframe.graphs import complement, cycle, from_edges, kneser, q_kneser

K4 = from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def test_least_eigenvalue_framework_is_the_projector():
    fw = least_eigenvalue_framework(K4, backend="exact")
    assert fw.gram @ fw.gram == fw.gram
    assert fw.gram[0, 0] == Fraction(3, 4) and fw.gram[0, 1] == Fraction(-1, 4)
    assert fw.d == 3 and fw.tau == -1 and fw.tau_multiplicity == 3
    a = adjacency_matrix(K4)
    assert a @ fw.gram == fw.gram * fw.tau


def test_projector_invariants_on_corpus():
    for g, _ in connected_graphs(max_n=5, min_n=2):
        spec = graph_spectrum(g, backend="auto")
        if spec.backend != "exact":
            continue
        fw = least_eigenvalue_framework(g, backend="exact")
        assert fw.gram @ fw.gram == fw.gram
        assert fw.gram.trace() == fw.d == fw.tau_multiplicity == spec.tau_multiplicity
        assert adjacency_matrix(g) @ fw.gram == fw.gram * fw.tau
        assert fw.points @ fw.points.transpose() == fw.gram


def test_floating_backend_close_to_exact():
    fw_e = least_eigenvalue_framework(kneser(5, 2), backend="exact")
    fw_f = least_eigenvalue_framework(kneser(5, 2), backend="floating")
    assert fw_f.d == fw_e.d == 4
    assert np.allclose(np.asarray(fw_f.gram, dtype=float), fw_e.gram.to_float(), atol=1e-8)


def test_floating_backend_on_irrational_spectrum():
    fw = least_eigenvalue_framework(cycle(5), backend="floating")
    assert fw.d == 2
    g = np.asarray(fw.gram, dtype=float)
    assert np.allclose(g, g @ g, atol=1e-8)


def test_exact_backend_refuses_irrational_tau():
    with pytest.raises(UnsupportedInputError):
        least_eigenvalue_framework(cycle(5), backend="exact")


def test_kneser_framework_petersen():
    fw = kneser_framework(5, 2)
    assert fw.n == 10 and fw.d == 4
    assert fw.tau == -2 and fw.tau_multiplicity == 4
    g = fw.graph
    for i in range(10):
        assert fw.gram[i, i] == 30
        assert sum(fw.gram[i, j] for j in range(10)) == 0
        for j in range(i + 1, 10):
            assert fw.gram[i, j] == (-20 if g.has_edge(i, j) else 5)
    # the gram is a positive multiple of the eigenprojector
    proj = least_eigenvalue_framework(g, backend="exact").gram
    assert fw.gram == proj * 75


def test_kneser_framework_guard():
    with pytest.raises(UnsupportedInputError):
        kneser_framework(4, 2)


def test_qkneser_framework_small():
    # 1-subspaces of F_2^3 give the complete graph on 7 vertices
    fw = qkneser_framework(2, 3, 1)
    assert fw.n == 7 and fw.d == 6
    assert fw.tau == -1 and fw.tau_multiplicity == 6
    for i in range(7):
        assert fw.gram[i, i] == 42
        for j in range(i + 1, 7):
            assert fw.gram[i, j] == -7
    a = adjacency_matrix(fw.graph)
    assert a @ fw.gram == fw.gram * fw.tau


def test_qkneser_framework_guard():
    with pytest.raises(UnsupportedInputError):
        qkneser_framework(2, 4, 2)


@pytest.mark.slow
def test_qkneser_framework_large():
    fw = qkneser_framework(2, 5, 2)
    assert fw.n == 155
    a = adjacency_matrix(fw.graph)
    assert a @ fw.gram == fw.gram * fw.tau
    assert all(sum(fw.gram[i, j] for j in range(155)) == 0 for i in range(10))


def test_rescaled():
    fw = kneser_framework(5, 2)
    half = fw.rescaled(Fraction(1, 30))
    assert half.gram[0, 0] == 1
    assert half.d == fw.d and half.tau == fw.tau
    with pytest.raises(ValueError):
        fw.rescaled(0)


def test_framework_validation():
    with pytest.raises(ValueError):
        Framework(K4, ExactMatrix([[1, 2], [2, 1]]), "exact")
    bad_points = ExactMatrix([[1], [0], [0], [0]])
    with pytest.raises(InternalCheckError):
        Framework(K4, ExactMatrix.identity(4), "exact", points=bad_points)


def test_canonical_stress_triangle():
    z = canonical_stress(from_edges(3, [(0, 1), (0, 2), (1, 2)]))
    assert z.z == ExactMatrix([[1, 1, 1], [1, 1, 1], [1, 1, 1]])
    assert z.condition_psd() and z.condition_corank()


def test_canonical_stress_on_corpus():
    for g, _ in connected_graphs(max_n=5, min_n=2):
        spec = graph_spectrum(g, backend="auto")
        if spec.backend != "exact":
            continue
        z = canonical_stress(g)
        assert z.z.nrows - rank_exact(z.z) == z.framework.d


def test_canonical_stress_refuses_cables():
    g = from_edges(2, [(0, 1)], labels={(0, 1): "cable"})
    with pytest.raises(UnsupportedInputError):
        canonical_stress(g)


def test_stress_condition_reporting():
    fw = least_eigenvalue_framework(K4, backend="exact")
    bad = StressMatrix(ExactMatrix.identity(4), fw)
    assert not bad.condition_annihilates()
    with pytest.raises(InternalCheckError):
        bad.verify()


def test_dominates_and_congruent():
    fw = least_eigenvalue_framework(K4, backend="exact")
    assert congruent(fw, fw)
    assert dominates(fw, fw)
    # unlabeled edges are struts: a framework with a strictly smaller inner
    # product on one edge is dominated but does not dominate
    rows = [[fw.gram[i, j] for j in range(4)] for i in range(4)]
    rows[0][1] -= 1
    rows[1][0] -= 1
    other = Framework(K4, ExactMatrix(rows), "exact")
    assert dominates(fw, other)
    assert not dominates(other, fw)
    assert not congruent(fw, other)
    # a diagonal change breaks comparability in both directions
    scaled = Framework(K4, fw.gram * Fraction(1, 2), "exact")
    assert not dominates(fw, scaled) and not dominates(scaled, fw)
