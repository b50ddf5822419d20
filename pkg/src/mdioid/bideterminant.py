"""Bideterminants and the attachment criteria built on them.

The bideterminant of a square matrix is the pair ``(plus, minus)`` obtained
by summing diagonal weights over even and odd permutations separately.  It
needs no subtraction, so it is defined over every commutative semiring.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from . import _kernels
from .exact import det_bareiss, interpolate, poly_eval
from .semimodule import (
    AttachmentCertificate,
    SemilinearMap,
    SemiMatrix,
    check_certificate,
    transfer_attachment,
)
from .semiring import (
    BOOLEAN,
    INTEGERS,
    MINPLUS,
    NATURALS,
    NONNEG_RATIONALS,
    ScalarSystem,
    UnsupportedSystemError,
    characteristic_bool_morphism,
    is_boolean,
    verify_axioms,
)

__all__ = [
    "BIDET_CAP",
    "Bideterminant",
    "DiagonalWeight",
    "RootWitness",
    "bidet",
    "diagonal_weights",
    "integer_determinant",
    "bool_attached_by_bidet",
    "mcos_attached_by_bidet",
    "real_root_witness",
    "bidet_property_suite",
    "bool_rows",
]

BIDET_CAP = 10


class Bideterminant(NamedTuple):
    plus: Any
    minus: Any


@dataclass(frozen=True)
class DiagonalWeight:
    permutation: Tuple[int, ...]
    weight: Any
    parity: str  # "even" or "odd"


def _require_square(A: SemiMatrix, cap: Optional[int]) -> int:
    if not A.is_square:
        raise ValueError(f"expected a square matrix, got {A.rows}x{A.cols}")
    if cap is not None and A.rows > cap:
        raise ValueError(f"matrix size {A.rows} exceeds the cap of {cap}")
    return A.rows


def bool_rows(A: SemiMatrix) -> List[int]:
    """Row support masks: bit ``j`` of row ``i`` is set iff ``A[i, j]`` is nonzero."""
    z = A.system.zero
    return [sum(1 << j for j, e in enumerate(row) if e != z) for row in A.entries]


def _walk(A: SemiMatrix, prune: bool) -> Iterator[Tuple[Tuple[int, ...], Any, int]]:
    # Lexicographic permutations; picking the pos-th smallest unused column
    # adds pos inversions, which is all the parity bookkeeping needed.
    system = A.system
    mul, zero = system.mul, system.zero
    n = A.rows
    rows = A.entries
    perm: List[int] = []

    def rec(i, remaining, parity, weight):
        if i == n:
            yield tuple(perm), weight, parity
            return
        row = rows[i]
        for pos, j in enumerate(remaining):
            w = mul(weight, row[j])
            if prune and w == zero:
                continue
            perm.append(j)
            yield from rec(i + 1, remaining[:pos] + remaining[pos + 1:], parity ^ (pos & 1), w)
            perm.pop()

    yield from rec(0, tuple(range(n)), 0, system.one)


def bidet(A: SemiMatrix, *, max_n: Optional[int] = BIDET_CAP) -> Bideterminant:
    """Exact permutation expansion split by parity."""
    _require_square(A, max_n)
    system = A.system
    if is_boolean(system):
        plus, minus = _kernels.bool_bidet(bool_rows(A), A.rows)
        return Bideterminant(plus, minus)
    acc = [system.zero, system.zero]
    add = system.add
    # zero weights contribute nothing, so dead prefixes are cut
    for _, w, parity in _walk(A, prune=True):
        acc[parity] = add(acc[parity], w)
    return Bideterminant(acc[0], acc[1])


def diagonal_weights(A: SemiMatrix, *, max_n: Optional[int] = 8) -> List[DiagonalWeight]:
    """Every permutation with its weight and parity, in lexicographic order."""
    _require_square(A, max_n)
    return [
        DiagonalWeight(p, w, "odd" if parity else "even")
        for p, w, parity in _walk(A, prune=False)
    ]


def _as_ints(A: SemiMatrix) -> List[List[int]]:
    out = []
    for row in A.entries:
        r = []
        for e in row:
            if isinstance(e, bool) or not isinstance(e, (int, Fraction)):
                raise UnsupportedSystemError(f"entry {e!r} is not numeric")
            r.append(e)
        out.append(r)
    return out


def integer_determinant(A: SemiMatrix) -> int:
    """Determinant of a Boolean or integer-valued matrix read over the integers."""
    _require_square(A, None)
    return det_bareiss(_as_ints(A))


def bool_attached_by_bidet(A: SemiMatrix) -> bool:
    """Columns of a Boolean matrix are attached iff ``plus == minus``."""
    _require_square(A, BIDET_CAP)
    if not is_boolean(A.system):
        raise UnsupportedSystemError("expected a Boolean matrix")
    bd = bidet(A)
    return bd.plus == bd.minus


def mcos_attached_by_bidet(A: SemiMatrix) -> bool:
    """Over an m-dioid the columns are attached iff both components are zero
    or both are nonzero."""
    _require_square(A, BIDET_CAP)
    system = A.system
    flag = system.is_mcos
    if flag is None and system.is_finite:
        flag = verify_axioms(system).is_mcos
    if not flag:
        raise UnsupportedSystemError(f"{system.name!r} is not an m-dioid")
    bd = bidet(A)
    z = system.zero
    return (bd.plus == z) == (bd.minus == z)


# ---------------------------------------------------------------------------
# real-root witness


@dataclass(frozen=True)
class RootWitness:
    """A nonnegative rational matrix with the zero pattern of ``A`` whose
    columns are dependent over the reals.

    ``positions`` are in the original column order; ``column_swap`` records
    whether columns 0 and 1 were exchanged to make the integer determinant
    positive.  ``polynomial`` holds ``det R(x)`` lowest degree first.
    """

    root: Fraction
    bracket: Tuple[Fraction, Fraction]
    p_value: Fraction
    polynomial: Tuple[Fraction, ...]
    permutation: Tuple[int, ...]
    positions: Tuple[Tuple[int, int], ...]
    column_swap: bool
    matrix: SemiMatrix
    coefficients: Tuple[Fraction, ...]
    certificate: AttachmentCertificate


def _substitute(base: List[List[int]], positions, x) -> List[List[Any]]:
    m = [list(r) for r in base]
    for i, j in positions:
        m[i][j] = x
    return m


def _cofactor_row(m: List[List[int]], r: int) -> List[int]:
    n = len(m)
    out = []
    for j in range(n):
        minor = [[m[i][c] for c in range(n) if c != j] for i in range(n) if i != r]
        sign = -1 if (r + j) % 2 else 1
        out.append(sign * det_bareiss(minor))
    return out


def _scaled_p(coeffs: Sequence[int], num: int, k: int) -> int:
    """``2**(k*d) * p(num / 2**k)`` for integer coefficients of degree ``d``."""
    d = len(coeffs) - 1
    acc = 0
    for i in range(d, -1, -1):
        acc = acc * num + (coeffs[i] << (k * (d - i)))
    return acc


def real_root_witness(
    A: SemiMatrix,
    *,
    tolerance: float = 1e-12,
    width: Fraction = Fraction(1, 2**80),
    max_steps: int = 2000,
) -> RootWitness:
    """Constructive witness that the columns of ``A`` are attached.

    Requires a Boolean square matrix with bideterminant ``(1, 1)`` and a
    nonzero integer determinant.  An odd unit-weight diagonal is turned into
    a variable ``x``; ``p(x) = det R(x)`` is positive at 1 and tends to minus
    infinity, so exact bisection locates a root ``a > 1``.  A null vector of
    ``R(a)`` split by sign gives the certificate.
    """
    n = _require_square(A, BIDET_CAP)
    if not is_boolean(A.system):
        raise UnsupportedSystemError("expected a Boolean matrix")
    bd = bidet(A)
    if bd != (1, 1):
        raise ValueError(f"bideterminant is {tuple(bd)}, expected (1, 1)")
    base = _as_ints(A)
    det = det_bareiss(base)
    if det == 0:
        raise ValueError("integer determinant is zero")
    swap = det < 0
    if swap:
        for row in base:
            row[0], row[1] = row[1], row[0]
    rows = [sum(1 << j for j, e in enumerate(r) if e) for r in base]
    sigma = _kernels.first_unit_diagonal(rows, n, 1)
    if sigma is None:  # bd says an odd unit diagonal exists
        raise AssertionError("no odd unit diagonal despite bideterminant (1, 1)")
    work_pos = tuple((i, sigma[i]) for i in range(n))

    xs = list(range(n + 1))
    ys = [det_bareiss(_substitute(base, work_pos, x)) for x in xs]
    coeffs = tuple(interpolate(xs, ys))
    icoeffs = [int(c) for c in coeffs]  # integer matrix, so p has integer coefficients

    # bisection on dyadic rationals lo = a / 2**k, hi = b / 2**k
    lo_n, hi_n, k = 1, 2, 0
    while _scaled_p(icoeffs, hi_n, k) > 0:
        lo_n, hi_n = hi_n, 2 * hi_n
    tol = Fraction(tolerance)
    root = None
    steps = 0
    if _scaled_p(icoeffs, hi_n, k) == 0:
        root = Fraction(hi_n, 1 << k)
    while root is None:
        lo_n, hi_n, k = 2 * lo_n, 2 * hi_n, k + 1
        mid = (lo_n + hi_n) // 2
        v = _scaled_p(icoeffs, mid, k)
        if v == 0:
            root = Fraction(mid, 1 << k)
            break
        if v > 0:
            lo_n = mid
        else:
            hi_n = mid
        steps += 1
        if Fraction(hi_n - lo_n, 1 << k) <= width:
            cands = [Fraction(lo_n, 1 << k), Fraction(hi_n, 1 << k)]
            cand = min(cands, key=lambda t: abs(poly_eval(coeffs, t)))
            if abs(poly_eval(coeffs, cand)) <= tol:
                root = cand
        if steps > max_steps:
            raise ArithmeticError("bisection did not reach the tolerance")
    bracket = (Fraction(lo_n, 1 << k), Fraction(hi_n, 1 << k))
    pv = poly_eval(coeffs, root)

    # R(a) scaled by its denominator is an integer matrix with the same null space
    den = root.denominator
    scaled = [[e * den for e in r] for r in base]
    for i, j in work_pos:
        scaled[i][j] = root.numerator
    best = None
    for r in range(n):
        cof = _cofactor_row(scaled, r)
        size = max(abs(c) for c in cof)
        if best is None or size > best[0]:
            best = (size, cof)
    size, lam = best
    if size == 0:
        raise ArithmeticError("R(a) has rank below n - 1; no cofactor null vector")
    # the residual is O(p(a)); entries that small relative to the largest are noise
    lam = [Fraction(c, size) if abs(c) * 10**9 > size else Fraction(0) for c in lam]
    work = [[Fraction(e) for e in r] for r in _substitute(base, work_pos, root)]

    if swap:
        for row in work:
            row[0], row[1] = row[1], row[0]
        lam[0], lam[1] = lam[1], lam[0]
        positions = tuple((i, {0: 1, 1: 0}.get(j, j)) for i, j in work_pos)
    else:
        positions = work_pos
    first = next(c for c in lam if c != 0)
    if first < 0:
        lam = [-c for c in lam]
    A_idx = tuple(j for j, c in enumerate(lam) if c > 0)
    B_idx = tuple(j for j, c in enumerate(lam) if c < 0)
    cert = AttachmentCertificate(
        A_idx, B_idx, {j: lam[j] for j in A_idx}, {j: -lam[j] for j in B_idx}
    )
    R = SemiMatrix(NONNEG_RATIONALS, tuple(tuple(r) for r in work))
    return RootWitness(
        root=root,
        bracket=bracket,
        p_value=pv,
        polynomial=coeffs,
        permutation=tuple(sigma),
        positions=positions,
        column_swap=swap,
        matrix=R,
        coefficients=tuple(lam),
        certificate=cert,
    )


def check_root_witness(A: SemiMatrix, w: RootWitness, *, tolerance: float = 1e-9) -> bool:
    """Zero pattern kept, ``|p(a)|`` small, and the Boolean image certificate valid."""
    phi = characteristic_bool_morphism(NONNEG_RATIONALS)
    if w.root <= 1:
        return False
    if w.matrix.map(phi).entries != tuple(tuple(int(e != 0) for e in r) for r in A.entries):
        return False
    if abs(det_bareiss([list(r) for r in w.matrix.entries])) > Fraction(tolerance):
        return False
    T = SemilinearMap(phi, A.rows)
    image = transfer_attachment(w.certificate, T)
    return check_certificate(A.columns(), image)


__all__.append("check_root_witness")


# ---------------------------------------------------------------------------
# property suite

_PROPERTIES = ("row_swap", "row_scale", "row_additivity", "transpose", "upper_triangular", "morphism")


def _default_values(system: ScalarSystem) -> tuple:
    if system.is_finite:
        return system.elements
    if system is NATURALS:
        return tuple(range(10))
    if system is INTEGERS:
        return tuple(range(-5, 6))
    if system is MINPLUS:
        return (MINPLUS.zero,) + tuple(Fraction(v) for v in (-1, 0, 1, 2, 3))
    if system is NONNEG_RATIONALS:
        return tuple(Fraction(a, b) for a in range(4) for b in (1, 2))
    raise UnsupportedSystemError(f"no default sample values for {system.name!r}")


def _bool_morphism_or_none(system: ScalarSystem):
    try:
        return characteristic_bool_morphism(system)
    except (ValueError, UnsupportedSystemError):
        return None


def bidet_property_suite(
    system: ScalarSystem,
    n: int,
    *,
    samples: int = 1000,
    seed: int = 0,
    values: Optional[Sequence] = None,
    exhaustive: Optional[bool] = None,
) -> Dict[str, Tuple[int, int]]:
    """Check the elementary bideterminant identities on many matrices.

    Returns ``{property: (passed, checked)}``.  Small finite carriers are
    swept exhaustively (every matrix, every scalar and every added row);
    otherwise ``samples`` random matrices are drawn from ``values``.  The
    morphism check is skipped (0 checked) when the system has no
    characteristic Boolean morphism.
    """
    if not 1 <= n <= 4:
        raise ValueError("property suite supports 1 <= n <= 4")
    vals = tuple(values) if values is not None else _default_values(system)
    if exhaustive is None:
        exhaustive = system.is_finite and len(vals) ** (n * n) <= 4096
    rng = random.Random(seed)
    add, mul, zero = system.add, system.mul, system.zero
    phi = _bool_morphism_or_none(system)
    scalars = vals if exhaustive else None
    row_vectors = (
        list(itertools.product(vals, repeat=n)) if exhaustive and len(vals) ** n <= 16 else None
    )
    tally = {name: [0, 0] for name in _PROPERTIES}

    def record(name, ok):
        tally[name][1] += 1
        if ok:
            tally[name][0] += 1

    def bd_of(rows):
        return bidet(SemiMatrix(system, rows), max_n=None)

    if exhaustive:
        matrices = (
            tuple(flat[i * n:(i + 1) * n] for i in range(n))
            for flat in itertools.product(vals, repeat=n * n)
        )
    else:
        matrices = (
            tuple(tuple(rng.choice(vals) for _ in range(n)) for _ in range(n))
            for _ in range(samples)
        )

    for rows in matrices:
        bd = bd_of(rows)
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                sw = list(rows)
                sw[i], sw[j] = sw[j], sw[i]
                ok &= bd_of(tuple(sw)) == (bd.minus, bd.plus)
        record("row_swap", ok)

        ok = True
        for i in range(n):
            for lam in scalars if scalars is not None else (rng.choice(vals),):
                sc = list(rows)
                sc[i] = tuple(mul(lam, e) for e in rows[i])
                ok &= bd_of(tuple(sc)) == (mul(lam, bd.plus), mul(lam, bd.minus))
        record("row_scale", ok)

        ok = True
        for i in range(n):
            extra = row_vectors if row_vectors is not None else [
                tuple(rng.choice(vals) for _ in range(n))
            ]
            for v in extra:
                other = list(rows)
                other[i] = v
                summed = list(rows)
                summed[i] = tuple(add(a, b) for a, b in zip(rows[i], v))
                bo = bd_of(tuple(other))
                ok &= bd_of(tuple(summed)) == (add(bd.plus, bo.plus), add(bd.minus, bo.minus))
        record("row_additivity", ok)

        record("transpose", bd_of(tuple(zip(*rows))) == bd)

        upper = tuple(tuple(e if j >= i else zero for j, e in enumerate(r)) for i, r in enumerate(rows))
        diag = system.prod(upper[i][i] for i in range(n))
        record("upper_triangular", bd_of(upper) == (diag, zero))

        if phi is not None:
            image = tuple(tuple(phi(e) for e in r) for r in rows)
            bi = bidet(SemiMatrix(BOOLEAN, image), max_n=None)
            record("morphism", bi == (phi(bd.plus), phi(bd.minus)))

    return {name: (p, c) for name, (p, c) in tally.items()}
