"""Orbit enumeration of connection sets and the hypercube Cayley census.

Two independent oracles guard the canonical-form machinery, neither sharing
code with it: a full group sweep (every invertible GF(2) matrix, n = 3) and
a generator BFS that partitions all subsets into orbits (n = 3 and 4).
"""

import itertools
import json
import random

import networkx as nx
import pytest

from corpus import connected_graphs
from eigenframe.errors import UnsupportedInputError
from eigenframe.graphs import CayleySpec, cayley_z2
from eigenframe.modular import gf2_rank
from eigenframe.survey import (
    MAX_DIMENSION,
    enumerate_orbits,
    report_csv,
    report_json_dict,
    run_survey,
    survey_one,
)
from oracles import dense_xspace_dim


def _gl_matrices(n):
    out = []
    for cols in itertools.product(range(1, 1 << n), repeat=n):
        if gf2_rank(cols) == n:
            out.append(cols)
    return out


def _apply(cols, v):
    img = 0
    for j in range(len(cols)):
        if (v >> j) & 1:
            img ^= cols[j]
    return img


def _transvection_tables(n):
    tables = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            tab = [v ^ (1 << i) if (v >> j) & 1 else v for v in range(1 << n)]
            tables.append(tab)
    return tables


def _orbit_min_reps(n):
    """Lex-least representative of every subset orbit, by generator BFS."""
    nv = (1 << n) - 1
    tables = _transvection_tables(n)
    seen = [False] * (1 << nv)
    reps = []
    for start in range(1, 1 << nv):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        best = None
        while stack:
            mask = stack.pop()
            tup = tuple(i + 1 for i in range(nv) if (mask >> i) & 1)
            if best is None or tup < best:
                best = tup
            for tab in tables:
                img = 0
                for i in range(nv):
                    if (mask >> i) & 1:
                        img |= 1 << (tab[i + 1] - 1)
                if not seen[img]:
                    seen[img] = True
                    stack.append(img)
        reps.append(best)
    return sorted(reps)


def test_full_group_sweep_n3():
    mats = _gl_matrices(3)
    assert len(mats) == 168
    canon = set()
    for mask in range(1, 1 << 7):
        s = tuple(i + 1 for i in range(7) if (mask >> i) & 1)
        best = min(tuple(sorted(_apply(cols, v) for v in s)) for cols in mats)
        canon.add(best)
    assert sorted(canon) == enumerate_orbits(3, spanning_only=False)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_generator_bfs_partition(n):
    oracle = _orbit_min_reps(n)
    assert enumerate_orbits(n, spanning_only=False) == oracle
    spanning = sorted(r for r in oracle if gf2_rank(r) == n)
    assert enumerate_orbits(n) == spanning


def test_orbit_counts():
    assert len(enumerate_orbits(1)) == 1
    assert len(enumerate_orbits(2)) == 2
    assert len(enumerate_orbits(3)) == 6
    assert len(enumerate_orbits(4)) == 36
    assert len(enumerate_orbits(3, spanning_only=False)) == 9
    assert len(enumerate_orbits(4, spanning_only=False)) == 45


def test_dimension_guard():
    assert MAX_DIMENSION == 5
    with pytest.raises(UnsupportedInputError):
        enumerate_orbits(6)
    with pytest.raises(UnsupportedInputError):
        enumerate_orbits(0)
    with pytest.raises(UnsupportedInputError):
        run_survey(6)


def test_representatives_pairwise_nonisomorphic():
    reps = enumerate_orbits(4)
    graphs = [nx.Graph(cayley_z2(CayleySpec(4, r)).edges()) for r in reps]
    for a in range(len(graphs)):
        for b in range(a + 1, len(graphs)):
            assert not nx.is_isomorphic(graphs[a], graphs[b]), (reps[a], reps[b])


def test_survey_counts_small():
    expected = {1: (1, 1), 2: (2, 2), 3: (6, 6), 4: (36, 34)}
    for n, (conn, uc) in expected.items():
        report = run_survey(n)
        assert report.summary() == {"n": n, "connected": conn, "uc": uc}


def test_survey_workers_deterministic():
    solo = run_survey(3, workers=1)
    duo = run_survey(3, workers=2)
    assert report_csv(solo) == report_csv(duo)


def test_nonuc_records_match_dense_oracle():
    report = run_survey(4)
    non_uc = [r for r in report.records if not r.uc]
    assert [r.connection_set for r in non_uc] == [
        (1, 2, 3, 4, 5, 8, 10, 12, 15),
        (1, 2, 3, 4, 8, 12),
    ]
    rng = random.Random(6)
    sample = non_uc + rng.sample([r for r in report.records if r.uc], 3)
    for rec in sample:
        g = cayley_z2(CayleySpec(4, rec.connection_set))
        assert dense_xspace_dim(g, rec.tau) == rec.x_dim


def test_survey_one_fields():
    rec = survey_one(3, (1, 2, 4))
    assert rec.n == 3 and rec.connected
    assert rec.tau == -3 and rec.tau_multiplicity == 1
    assert rec.x_dim == 0 and rec.uc
    rec = survey_one(3, (1, 2))  # spans only a plane: disconnected graph
    assert not rec.connected


def test_csv_format():
    text = report_csv(run_survey(3))
    lines = text.strip().split("\n")
    assert lines[0] == "n,connection_set,connected,tau,tau_mult,x_dim,uc"
    assert len(lines) == 1 + 6
    row = lines[1].split(",")
    assert row[0] == "3" and row[2] in ("true", "false") and row[6] in ("true", "false")
    # connection sets are semicolon-joined hex values
    assert all(c in "0123456789abcdef;" for c in row[1])


def test_json_report_shape():
    doc = report_json_dict(run_survey(2))
    assert doc["summary"] == {"n": 2, "connected": 2, "uc": 2}
    assert "equivalence" in doc
    assert len(doc["records"]) == 2
    assert json.dumps(doc)  # serializable as-is
    rec = doc["records"][0]
    assert set(rec) == {"n", "connection_set", "connected", "tau", "tau_mult", "x_dim", "uc"}
