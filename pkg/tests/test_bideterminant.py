import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EXAMPLE_ROWS, bool_matrices
from mdioid.bideterminant import (
    Bideterminant,
    bidet,
    bidet_property_suite,
    bool_attached_by_bidet,
    check_root_witness,
    diagonal_weights,
    integer_determinant,
    mcos_attached_by_bidet,
    real_root_witness,
)
from mdioid.exact import det_bareiss
from mdioid.semimodule import SemiMatrix, attach_bruteforce
from mdioid.semiring import (
    BOOLEAN,
    INTEGERS,
    MINPLUS,
    NATURALS,
    FiniteMonoid,
    UnsupportedSystemError,
    characteristic_bool_morphism,
    lagrassa_embed,
    power_dioid,
)


def sign(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def oracle_bidet(system, rows):
    """itertools.permutations expansion, parity from the inversion count."""
    n = len(rows)
    acc = [system.zero, system.zero]
    for p in itertools.permutations(range(n)):
        acc[sign(p)] = system.add(acc[sign(p)], system.prod(rows[i][p[i]] for i in range(n)))
    return tuple(acc)


def test_identity_over_several_systems(z2mult):
    for system in (BOOLEAN, NATURALS, INTEGERS, power_dioid(z2mult), MINPLUS):
        I = SemiMatrix.identity(system, 3)
        assert bidet(I) == (system.one, system.zero)


def test_small_goldens():
    assert bidet(SemiMatrix(BOOLEAN, ((1, 1), (1, 1)))) == (1, 1)
    assert bidet(SemiMatrix(NATURALS, ((1, 2), (3, 4)))) == (4, 6)
    assert bidet(SemiMatrix(BOOLEAN, EXAMPLE_ROWS)) == (1, 1)


def test_bideterminant_is_a_pair():
    bd = bidet(SemiMatrix(NATURALS, ((1, 2), (3, 4))))
    assert isinstance(bd, Bideterminant)
    assert bd.plus == 4 and bd.minus == 6


def test_errors():
    with pytest.raises(ValueError, match="square"):
        bidet(SemiMatrix(NATURALS, ((1, 2, 3), (4, 5, 6))))
    with pytest.raises(ValueError, match="cap"):
        bidet(SemiMatrix.identity(NATURALS, 11))


def test_bool_kernel_matches_oracle_exhaustively():
    for n in range(1, 4):
        for A in bool_matrices(n):
            assert tuple(bidet(A)) == oracle_bidet(BOOLEAN, A.entries)


@pytest.mark.parametrize("seed", range(3))
def test_generic_expansion_matches_oracle(seed, z2mult):
    rng = random.Random(seed)
    systems = [NATURALS, INTEGERS, MINPLUS, power_dioid(z2mult), lagrassa_embed(FiniteMonoid.cyclic(2))]
    pools = {
        NATURALS: range(5),
        INTEGERS: range(-3, 4),
        MINPLUS: [MINPLUS.zero, Fraction(0), Fraction(1), Fraction(-2), Fraction(5, 2)],
    }
    for system in systems:
        pool = list(pools.get(system, system.elements or ()))
        for _ in range(60):
            n = rng.randint(1, 4)
            rows = tuple(tuple(rng.choice(pool) for _ in range(n)) for _ in range(n))
            assert tuple(bidet(SemiMatrix(system, rows))) == oracle_bidet(system, rows)


def test_integer_difference_is_the_determinant():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 5)
        rows = tuple(tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(n))
        bd = bidet(SemiMatrix(INTEGERS, rows))
        assert bd.plus - bd.minus == det_bareiss(rows) == sympy.Matrix(rows).det()


def test_diagonal_weights_identity():
    ws = diagonal_weights(SemiMatrix.identity(BOOLEAN, 2))
    assert [(w.permutation, w.weight, w.parity) for w in ws] == [((0, 1), 1, "even"), ((1, 0), 0, "odd")]


def test_diagonal_weights_example():
    ws = diagonal_weights(SemiMatrix(BOOLEAN, EXAMPLE_ROWS))
    assert len(ws) == 24
    assert any(w.weight == 1 and w.parity == "even" for w in ws)
    assert any(w.weight == 1 and w.parity == "odd" for w in ws)
    assert [w.permutation for w in ws] == list(itertools.permutations(range(4)))


def test_diagonal_weights_zero_row():
    ws = diagonal_weights(SemiMatrix(NATURALS, ((1, 2, 3), (0, 0, 0), (4, 5, 6))))
    assert all(w.weight == 0 for w in ws)
    assert bidet(SemiMatrix(NATURALS, ((1, 2, 3), (0, 0, 0), (4, 5, 6)))) == (0, 0)


# -- criteria


def test_bool_criterion_examples():
    assert bool_attached_by_bidet(SemiMatrix(BOOLEAN, EXAMPLE_ROWS))
    assert integer_determinant(SemiMatrix(BOOLEAN, EXAMPLE_ROWS)) == 1
    assert not bool_attached_by_bidet(SemiMatrix.identity(BOOLEAN, 4))
    assert bool_attached_by_bidet(SemiMatrix(BOOLEAN, ((1, 1, 0), (0, 0, 1), (1, 1, 1))))


def test_bool_criterion_matches_search_n3():
    for A in bool_matrices(3):
        assert bool_attached_by_bidet(A) == (attach_bruteforce(A.columns()) is not None)


def test_mcos_criterion_examples(z2mult):
    P = power_dioid(z2mult)
    A = SemiMatrix(P, (((1,), (0,)), ((0,), (1,))))
    assert bidet(A) == ((1,), (0,))
    assert mcos_attached_by_bidet(A)
    assert attach_bruteforce(A.columns()) is not None
    assert not mcos_attached_by_bidet(SemiMatrix.identity(P, 2))
    Z = SemiMatrix(P, (((1,), (0,)), ((), ())))
    assert bidet(Z) == ((), ()) and mcos_attached_by_bidet(Z)
    with pytest.raises(UnsupportedSystemError):
        mcos_attached_by_bidet(SemiMatrix.identity(NATURALS, 2))


@pytest.mark.parametrize(
    "system",
    [
        power_dioid(FiniteMonoid.from_operation((1, 0), lambda a, b: a * b)),
        lagrassa_embed(FiniteMonoid.trivial()),
        lagrassa_embed(FiniteMonoid.cyclic(2)),
        power_dioid(FiniteMonoid.cyclic(3)),
    ],
    ids=["power-z2mult", "lagrassa-trivial", "lagrassa-z2", "power-z3"],
)
def test_mcos_criterion_all_2x2(system):
    for flat in itertools.product(system.elements, repeat=4):
        A = SemiMatrix(system, (flat[:2], flat[2:]))
        assert mcos_attached_by_bidet(A) == (attach_bruteforce(A.columns(), exhaustive_scalars=True) is not None)


# -- real-root witness


def test_root_witness_example():
    A = SemiMatrix(BOOLEAN, EXAMPLE_ROWS)
    w = real_root_witness(A)
    assert w.root > 1
    assert abs(w.p_value) < Fraction(1, 10**9)
    assert check_root_witness(A, w)
    # p(x) = -x^4 + 3x^2 - 1, whose root above 1 is the golden ratio
    assert w.polynomial == (-1, 0, 3, 0, -1)
    assert abs(float(w.root) - (1 + 5**0.5) / 2) < 1e-12
    phi = characteristic_bool_morphism(w.matrix.system)
    assert w.matrix.map(phi).entries == A.entries


def test_root_witness_rejects_hypothesis_violations():
    with pytest.raises(ValueError):
        real_root_witness(SemiMatrix.identity(BOOLEAN, 3))
    with pytest.raises(ValueError, match="determinant is zero"):
        real_root_witness(SemiMatrix(BOOLEAN, ((1, 1), (1, 1))))


def test_root_witness_with_column_swap():
    # integer determinant -1 forces the swap
    rows = ((0, 1, 1), (1, 1, 0), (1, 1, 1))
    A = SemiMatrix(BOOLEAN, rows)
    assert bidet(A) == (1, 1) and integer_determinant(A) < 0
    w = real_root_witness(A)
    assert w.column_swap
    assert check_root_witness(A, w)
    assert all(rows[i][j] == 1 for i, j in w.positions)


def test_root_witness_all_3x3():
    count = 0
    for A in bool_matrices(3):
        if bidet(A) == (1, 1) and integer_determinant(A) != 0:
            count += 1
            assert check_root_witness(A, real_root_witness(A))
    assert count > 0


# -- property suite


def test_property_suite_bool_exhaustive():
    result = bidet_property_suite(BOOLEAN, 3)
    assert set(result) == {"row_swap", "row_scale", "row_additivity", "transpose", "upper_triangular", "morphism"}
    for name, (passed, checked) in result.items():
        assert checked == 512 and passed == checked, name


def test_property_suite_naturals_random():
    for name, (passed, checked) in bidet_property_suite(NATURALS, 3, samples=1000, seed=1).items():
        assert checked == 1000 and passed == checked, name


def test_property_suite_integers_skips_morphism():
    result = bidet_property_suite(INTEGERS, 2, samples=100)
    assert result["morphism"] == (0, 0)
    assert result["transpose"] == (100, 100)


def test_property_suite_power_dioid(z2mult):
    result = bidet_property_suite(power_dioid(z2mult), 2)
    assert all(p == c and c == 256 for p, c in result.values())


def test_transpose_of_example():
    A = SemiMatrix(BOOLEAN, EXAMPLE_ROWS)
    assert bidet(A.transpose()) == bidet(A) == (1, 1)


def test_morphism_commutation_naturals_exhaustive():
    phi = characteristic_bool_morphism(NATURALS)
    for n in (1, 2):
        for flat in itertools.product(range(4), repeat=n * n):
            rows = tuple(flat[i * n:(i + 1) * n] for i in range(n))
            bd = bidet(SemiMatrix(NATURALS, rows))
            image = bidet(SemiMatrix(BOOLEAN, tuple(tuple(phi(e) for e in r) for r in rows)))
            assert image == (phi(bd.plus), phi(bd.minus))


@pytest.mark.slow
def test_morphism_commutation_naturals_3x3_exhaustive():
    phi = characteristic_bool_morphism(NATURALS)
    for flat in itertools.product(range(4), repeat=9):
        rows = (flat[0:3], flat[3:6], flat[6:9])
        bd = bidet(SemiMatrix(NATURALS, rows))
        image = bidet(SemiMatrix(BOOLEAN, tuple(tuple(phi(e) for e in r) for r in rows)))
        assert image == (phi(bd.plus), phi(bd.minus))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(0, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_row_swap_property_naturals(rows):
    A = SemiMatrix(NATURALS, rows)
    bd = bidet(A)
    if len(rows) >= 2:
        sw = [rows[1], rows[0]] + rows[2:]
        assert bidet(SemiMatrix(NATURALS, sw)) == (bd.minus, bd.plus)
    assert bidet(A.transpose()) == bd
