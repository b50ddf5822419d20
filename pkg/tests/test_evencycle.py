import itertools
import math
import random
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from conftest import EXAMPLE_ROWS, bool_matrices
from mdioid.bideterminant import bidet
from mdioid.evencycle import (
    Digraph,
    build_reduction_digraph,
    complement_matrix,
    decide_bidet_equal,
    has_even_cycle,
    optimal_assignment,
    permutation_parity,
    zero_weight_permutation,
)
from mdioid.semimodule import SemiMatrix
from mdioid.semiring import BOOLEAN, MINPLUS


def nx_has_even_cycle(g):
    G = nx.DiGraph()
    G.add_nodes_from(range(g.node_count))
    G.add_edges_from(g.arcs)
    return any(len(c) % 2 == 0 for c in nx.simple_cycles(G))


def test_complement_examples():
    c = complement_matrix(SemiMatrix.identity(BOOLEAN, 2))
    assert c.system is MINPLUS
    assert c.entries == ((0, 1), (1, 0))
    assert complement_matrix(SemiMatrix(BOOLEAN, ((1, 1), (1, 1)))).entries == ((0, 0), (0, 0))
    ex = complement_matrix(SemiMatrix(BOOLEAN, EXAMPLE_ROWS))
    flipped = [(i, j) for i in range(4) for j in range(4) if ex[i, j] == 1]
    assert len(flipped) == 6
    assert all(EXAMPLE_ROWS[i][j] == 0 for i, j in flipped)


def test_complement_is_an_involution_on_patterns():
    for A in bool_matrices(3):
        def flip(m):
            return SemiMatrix(BOOLEAN, tuple(tuple(int(e == 1) for e in r) for r in m.entries))

        once = flip(complement_matrix(A))
        assert once != A
        assert flip(complement_matrix(once)) == A


def test_zero_weight_permutation_examples():
    assert zero_weight_permutation(complement_matrix(SemiMatrix.identity(BOOLEAN, 3))) == (0, 1, 2)
    zero_row = SemiMatrix(BOOLEAN, ((1, 1), (0, 0)))
    assert zero_weight_permutation(complement_matrix(zero_row)) is None
    assert zero_weight_permutation(complement_matrix(SemiMatrix(BOOLEAN, EXAMPLE_ROWS))) is not None


def test_zero_weight_permutation_iff_unit_diagonal():
    for n in range(1, 4):
        for A in bool_matrices(n):
            bd = bidet(A)
            sigma = zero_weight_permutation(complement_matrix(A))
            assert (sigma is not None) == (bd.plus == 1 or bd.minus == 1)
            if sigma is not None:
                assert all(A[i, sigma[i]] == 1 for i in range(n))


def test_zero_weight_permutation_is_lexicographically_first():
    for A in bool_matrices(3):
        sigma = zero_weight_permutation(complement_matrix(A))
        units = [p for p in itertools.permutations(range(3)) if all(A[i, p[i]] for i in range(3))]
        assert sigma == (units[0] if units else None)


@pytest.mark.parametrize("n", [2, 4, 7, 9, 10])
def test_assignment_matches_scipy(n):
    rng = random.Random(n)
    for _ in range(40 if n < 9 else 8):
        cost = [[Fraction(rng.randint(0, 6), rng.choice((1, 2))) for _ in range(n)] for _ in range(n)]
        value, perm = optimal_assignment(cost)
        r, c = linear_sum_assignment(np.array(cost, dtype=float))
        assert abs(float(value) - float(sum(cost[i][j] for i, j in zip(r, c)))) < 1e-9
        assert sum(cost[i][perm[i]] for i in range(n)) == value
        assert sorted(perm) == list(range(n))


def test_assignment_lexicographic_tie_break_above_exhaustive_cap():
    # all-zero costs: every permutation is optimal, the identity is first
    n = 9
    assert optimal_assignment([[0] * n for _ in range(n)]) == (0, tuple(range(n)))


def test_assignment_with_forbidden_entries():
    inf = math.inf
    assert optimal_assignment([[inf, 1], [2, inf]]) == (3, (1, 0))
    assert optimal_assignment([[inf, inf], [1, 2]]) is None
    big = [[inf] * 9 for _ in range(9)]
    assert optimal_assignment(big) is None


def test_reduction_digraph_examples():
    I = complement_matrix(SemiMatrix.identity(BOOLEAN, 3))
    assert build_reduction_digraph(I, (0, 1, 2)).arcs == frozenset()
    J = complement_matrix(SemiMatrix(BOOLEAN, ((1,) * 3,) * 3))
    g = build_reduction_digraph(J, (0, 1, 2))
    assert len(g.arcs) == 6
    with pytest.raises(ValueError, match="zero-cost"):
        build_reduction_digraph(I, (1, 0, 2))


def test_even_cycle_examples():
    assert has_even_cycle(Digraph(2, frozenset({(0, 1), (1, 0)}))) == [0, 1]
    assert has_even_cycle(Digraph(3, frozenset({(0, 1), (1, 2), (2, 0)}))) is None
    K3 = Digraph(3, frozenset((i, j) for i in range(3) for j in range(3) if i != j))
    assert len(has_even_cycle(K3)) == 2
    with pytest.raises(ValueError, match="cap"):
        has_even_cycle(Digraph(13, frozenset()))


def test_even_cycle_matches_networkx():
    rng = random.Random(2)
    for _ in range(1500):
        n = rng.randint(1, 7)
        p = rng.random()
        arcs = frozenset((i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p)
        g = Digraph(n, arcs)
        cyc = has_even_cycle(g)
        assert (cyc is not None) == nx_has_even_cycle(g)
        if cyc is not None:
            assert len(cyc) % 2 == 0 and len(set(cyc)) == len(cyc)
            assert cyc[0] == min(cyc)
            assert all((cyc[t], cyc[(t + 1) % len(cyc)]) in arcs for t in range(len(cyc)))


def test_decide_examples():
    t = decide_bidet_equal(SemiMatrix.identity(BOOLEAN, 4))
    assert t.verdict == "not-equal" and t.determinant == 1 and t.cycle is None
    A = SemiMatrix(BOOLEAN, EXAMPLE_ROWS)
    t = decide_bidet_equal(A)
    assert t.verdict == "equal" and t.branch == "even-cycle" and t.determinant == 1
    assert t.cycle is not None and t.validate(A)
    R = SemiMatrix(BOOLEAN, ((1, 0, 1), (1, 0, 1), (0, 1, 1)))
    t = decide_bidet_equal(R)
    assert t.branch == "determinant-zero" and t.verdict == "equal"


def test_decide_matches_expansion_n_le_3():
    for n in range(1, 4):
        for A in bool_matrices(n):
            t = decide_bidet_equal(A)
            bd = bidet(A)
            assert t.equal == (bd.plus == bd.minus)
            assert t.validate(A)


def test_opposite_parity_from_cycle():
    rng = random.Random(9)
    for _ in range(500):
        n = rng.randint(2, 6)
        A = SemiMatrix(BOOLEAN, tuple(tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(n)))
        t = decide_bidet_equal(A)
        if t.cycle is not None:
            assert permutation_parity(t.second_permutation) != permutation_parity(t.permutation)
            assert all(A[i, t.second_permutation[i]] == 1 for i in range(n))


def test_tampered_trace_fails_validation():
    A = SemiMatrix(BOOLEAN, EXAMPLE_ROWS)
    t = decide_bidet_equal(A)
    from dataclasses import replace

    assert not replace(t, verdict="not-equal").validate(A)
    assert not replace(t, cycle=(0, 1)).validate(A)
    assert not replace(t, parity="odd").validate(A)


def test_decide_rejects_non_boolean():
    with pytest.raises(Exception):
        decide_bidet_equal(SemiMatrix.identity(MINPLUS, 2))


def test_permutation_parity():
    for p in itertools.permutations(range(5)):
        inv = sum(1 for i in range(5) for j in range(i + 1, 5) if p[i] > p[j])
        assert permutation_parity(p) == inv % 2
