"""Vectors and matrices over a semiring, and linear attachment.

A list of vectors is *attached* when two disjoint index sets ``A`` and ``B``
(not both empty) and nonzero coefficients give equal weighted sums; the empty
sum is the zero vector.  Indices are 0-based throughout the library.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Mapping, Optional, Sequence, Tuple

from . import _kernels
from .exact import nullspace_vector
from .semiring import (
    NATURALS,
    ScalarSystem,
    SemiringMorphism,
    UnsupportedSystemError,
    is_boolean,
    verify_axioms,
)

__all__ = [
    "BOOL_ATTACH_CAP",
    "FINITE_ATTACH_CAP",
    "SemiVector",
    "SemiMatrix",
    "AttachmentCertificate",
    "SemilinearMap",
    "check_certificate",
    "attach_bruteforce",
    "attach_mcos",
    "attach_via_real",
    "real_dependency",
    "apply_semilinear",
    "transfer_attachment",
    "lift_to_nat",
    "bool_masks",
]

BOOL_ATTACH_CAP = 20
FINITE_ATTACH_CAP = 8


@dataclass(frozen=True)
class SemiVector:
    system: ScalarSystem = field(compare=False)
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("vectors need at least one entry")
        bad = [e for e in self.entries if not self.system.contains(e)]
        if bad:
            raise ValueError(f"{bad[0]!r} is not an element of {self.system.name}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, SemiVector):
            return NotImplemented
        return self.system is other.system and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "SemiVector") -> "SemiVector":
        _same_shape(self, other)
        add = self.system.add
        return SemiVector(self.system, tuple(add(a, b) for a, b in zip(self, other)))

    def scale(self, scalar: Any) -> "SemiVector":
        mul = self.system.mul
        return SemiVector(self.system, tuple(mul(scalar, a) for a in self))

    def is_zero(self) -> bool:
        z = self.system.zero
        return all(e == z for e in self.entries)

    @classmethod
    def zeros(cls, system: ScalarSystem, k: int) -> "SemiVector":
        return cls(system, (system.zero,) * k)

    def __repr__(self) -> str:
        fmt = self.system.format
        return f"SemiVector[{self.system.name}]({', '.join(fmt(e) for e in self.entries)})"


def _same_shape(u: SemiVector, v: SemiVector) -> None:
    if u.system is not v.system:
        raise ValueError("vectors belong to different systems")
    if len(u) != len(v):
        raise ValueError("vectors have different lengths")


@dataclass(frozen=True)
class SemiMatrix:
    system: ScalarSystem = field(compare=False)
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise ValueError("matrices need positive dimensions")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        for r in rows:
            for e in r:
                if not self.system.contains(e):
                    raise ValueError(f"{e!r} is not an element of {self.system.name}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, SemiMatrix):
            return NotImplemented
        return self.system is other.system and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def row(self, i: int) -> SemiVector:
        return SemiVector(self.system, self.entries[i])

    def column(self, j: int) -> SemiVector:
        return SemiVector(self.system, tuple(r[j] for r in self.entries))

    def columns(self) -> List[SemiVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "SemiMatrix":
        return SemiMatrix(self.system, tuple(zip(*self.entries)))

    def map(self, morphism: SemiringMorphism) -> "SemiMatrix":
        if morphism.source is not self.system:
            raise ValueError("morphism source does not match the matrix system")
        f = morphism.map
        return SemiMatrix(morphism.target, tuple(tuple(f(e) for e in r) for r in self.entries))

    @classmethod
    def from_columns(cls, columns: Sequence[SemiVector]) -> "SemiMatrix":
        if not columns:
            raise ValueError("need at least one column")
        system = columns[0].system
        for c in columns:
            _same_shape(columns[0], c)
        return cls(system, tuple(zip(*(c.entries for c in columns))))

    @classmethod
    def identity(cls, system: ScalarSystem, n: int) -> "SemiMatrix":
        return cls(
            system,
            tuple(tuple(system.one if i == j else system.zero for j in range(n)) for i in range(n)),
        )

    def __repr__(self) -> str:
        fmt = self.system.format
        body = "; ".join(" ".join(fmt(e) for e in r) for r in self.entries)
        return f"SemiMatrix[{self.system.name}]({body})"


@dataclass(frozen=True)
class AttachmentCertificate:
    """Index sets ``A``, ``B`` with coefficient maps ``lambdas`` / ``mus``."""

    A: Tuple[int, ...]
    B: Tuple[int, ...]
    lambdas: Mapping[int, Any]
    mus: Mapping[int, Any]

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(sorted(self.A)))
        object.__setattr__(self, "B", tuple(sorted(self.B)))
        object.__setattr__(self, "lambdas", dict(self.lambdas))
        object.__setattr__(self, "mus", dict(self.mus))

    @classmethod
    def uniform(cls, A, B, coefficient) -> "AttachmentCertificate":
        return cls(tuple(A), tuple(B), {a: coefficient for a in A}, {b: coefficient for b in B})

    def one_based(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(a + 1 for a in self.A), tuple(b + 1 for b in self.B)


def _weighted_sum(system, vectors, indices, coeffs, k):
    total = [system.zero] * k
    add, mul = system.add, system.mul
    for i in indices:
        c = coeffs[i]
        for t, e in enumerate(vectors[i].entries):
            total[t] = add(total[t], mul(c, e))
    return total


def _check_list(vectors: Sequence[SemiVector]) -> Tuple[ScalarSystem, int]:
    if not vectors:
        raise ValueError("empty vector list")
    first = vectors[0]
    for v in vectors:
        _same_shape(first, v)
    return first.system, len(first)


def check_certificate(vectors: Sequence[SemiVector], cert: AttachmentCertificate) -> bool:
    """True iff ``cert`` is a valid attachment of ``vectors``.

    Raises ``ValueError`` on mismatched vectors, out-of-range indices or a
    zero coefficient; overlapping or empty index sets just return False.
    """
    system, k = _check_list(vectors)
    n = len(vectors)
    for side, coeffs in ((cert.A, cert.lambdas), (cert.B, cert.mus)):
        for i in side:
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range for {n} vectors")
            if i not in coeffs:
                raise ValueError(f"missing coefficient for index {i}")
            if coeffs[i] == system.zero:
                raise ValueError(f"zero coefficient at index {i}")
            if not system.contains(coeffs[i]):
                raise ValueError(f"coefficient {coeffs[i]!r} not in {system.name}")
    if set(cert.A) & set(cert.B):
        return False
    if not cert.A and not cert.B:
        return False
    left = _weighted_sum(system, vectors, cert.A, cert.lambdas, k)
    right = _weighted_sum(system, vectors, cert.B, cert.mus, k)
    return left == right


def bool_masks(vectors: Sequence[SemiVector]) -> List[int]:
    """Support bitmask of each vector (bit ``t`` set iff entry ``t`` is nonzero)."""
    out = []
    for v in vectors:
        z = v.system.zero
        m = 0
        for t, e in enumerate(v.entries):
            if e != z:
                m |= 1 << t
        out.append(m)
    return out


def _bits(mask: int) -> Tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def _is_mcos(system: ScalarSystem) -> bool:
    if system.is_mcos is None and system.elements is not None:
        return verify_axioms(system).is_mcos
    return bool(system.is_mcos)


def _absorbing(system: ScalarSystem):
    if system.absorbing is not None:
        return system.absorbing
    report = verify_axioms(system)
    if report.absorbing is None:
        raise UnsupportedSystemError(f"{system.name!r} has no absorbing element")
    return report.absorbing


def _sign_patterns(k: int):
    """``(A, B)`` index tuples in lexicographic order over {unused, A, B}^k.

    Index 0 is the most significant digit and the first used index is in A.
    """
    for digits in itertools.product((0, 1, 2), repeat=k):
        first = next((d for d in digits if d), 0)
        if first != 1:
            continue
        A = tuple(i for i, d in enumerate(digits) if d == 1)
        B = tuple(i for i, d in enumerate(digits) if d == 2)
        yield A, B


def attach_bruteforce(
    vectors: Sequence[SemiVector],
    *,
    exhaustive_scalars: bool = False,
    max_count: Optional[int] = None,
) -> Optional[AttachmentCertificate]:
    """Search for the lexicographically first attachment certificate.

    Boolean lists use unit coefficients.  Over an m-dioid every coefficient
    is ``m``, which loses nothing: any certificate's supports also match
    after multiplying both sides by ``m``.  Other finite systems (or
    ``exhaustive_scalars=True``) enumerate every nonzero coefficient choice
    for each sign pattern.  The empty list is detached.
    """
    if not vectors:
        return None
    system, k = _check_list(vectors)
    n = len(vectors)
    if is_boolean(system):
        cap = BOOL_ATTACH_CAP if max_count is None else max_count
        _cap(n, cap)
        hit = _kernels.sign_pattern_attach(bool_masks(vectors))
        if hit is None:
            return None
        return AttachmentCertificate.uniform(_bits(hit[0]), _bits(hit[1]), 1)

    mcos = _is_mcos(system)
    if mcos and not exhaustive_scalars:
        cap = BOOL_ATTACH_CAP if max_count is None else max_count
        _cap(n, cap)
        m = _absorbing(system)
        scaled = [v.scale(m) for v in vectors]
        for A, B in _sign_patterns(n):
            left = _weighted_sum(system, scaled, A, _ones(system, A), k)
            right = _weighted_sum(system, scaled, B, _ones(system, B), k)
            if left == right:
                return AttachmentCertificate.uniform(A, B, m)
        return None

    if system.elements is None:
        raise UnsupportedSystemError(
            f"brute-force attachment needs a finite system or an m-dioid, not {system.name!r}"
        )
    cap = FINITE_ATTACH_CAP if max_count is None else max_count
    _cap(n, cap)
    scalars = system.nonzero_elements()
    for A, B in _sign_patterns(n):
        for la in itertools.product(scalars, repeat=len(A)):
            lambdas = dict(zip(A, la))
            left = _weighted_sum(system, vectors, A, lambdas, k)
            for mb in itertools.product(scalars, repeat=len(B)):
                mus = dict(zip(B, mb))
                if left == _weighted_sum(system, vectors, B, mus, k):
                    return AttachmentCertificate(A, B, lambdas, mus)
    return None


def _ones(system, idx):
    return {i: system.one for i in idx}


def _cap(n: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"{n} vectors exceed the search cap of {cap}")


def attach_mcos(
    vectors: Sequence[SemiVector], *, max_count: Optional[int] = None
) -> Optional[AttachmentCertificate]:
    """Decide attachment over an m-dioid through the Boolean image.

    The supports are searched for a Boolean certificate; when one exists the
    same index sets with every coefficient ``m`` attach the original list.
    A zero vector on its own is returned as ``A={i}, B={}``.
    """
    if not vectors:
        return None
    system, _ = _check_list(vectors)
    if not _is_mcos(system):
        raise UnsupportedSystemError(f"{system.name!r} is not an m-dioid")
    m = _absorbing(system)
    cap = BOOL_ATTACH_CAP if max_count is None else max_count
    _cap(len(vectors), cap)
    masks = bool_masks(vectors)
    if 0 in masks:
        return AttachmentCertificate.uniform((masks.index(0),), (), m)
    hit = _kernels.closure_attach(masks)
    if hit is None:
        return None
    return AttachmentCertificate.uniform(_bits(hit[0]), _bits(hit[1]), m)


def _require_bool(vectors):
    system, k = _check_list(vectors)
    if not is_boolean(system):
        raise UnsupportedSystemError("expected Boolean vectors")
    return k


def real_dependency(vectors: Sequence[SemiVector]) -> Optional[List[Fraction]]:
    """Rational coefficients of a real linear dependency, or None if independent."""
    k = _require_bool(vectors)
    cols = [v.entries for v in vectors]
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(k)]
    return nullspace_vector(matrix)


def attach_via_real(vectors: Sequence[SemiVector]) -> Optional[AttachmentCertificate]:
    """Boolean certificate from a real dependency, split by coefficient sign.

    None only means the vectors are independent over the reals; they may
    still be attached over the Booleans.
    """
    if not vectors:
        return None
    lam = real_dependency(vectors)
    if lam is None:
        return None
    first = next(x for x in lam if x != 0)
    if first < 0:
        lam = [-x for x in lam]
    A = tuple(i for i, x in enumerate(lam) if x > 0)
    B = tuple(i for i, x in enumerate(lam) if x < 0)
    return AttachmentCertificate.uniform(A, B, 1)


@dataclass(frozen=True)
class SemilinearMap:
    """Componentwise extension ``T`` of a morphism to ``M^k -> N^k``."""

    morphism: SemiringMorphism
    dimension: int

    def __call__(self, v: SemiVector) -> SemiVector:
        return apply_semilinear(self, v)


def apply_semilinear(T: SemilinearMap, v: SemiVector) -> SemiVector:
    if v.system is not T.morphism.source:
        raise ValueError("vector is not over the map's source system")
    if len(v) != T.dimension:
        raise ValueError(f"expected length {T.dimension}, got {len(v)}")
    f = T.morphism.map
    return SemiVector(T.morphism.target, tuple(f(e) for e in v.entries))


def transfer_attachment(cert: AttachmentCertificate, T: SemilinearMap) -> AttachmentCertificate:
    """Push a certificate through an entire morphism (coefficients mapped)."""
    if not T.morphism.is_entire:
        raise ValueError("attachment transfers only through an entire morphism")
    f = T.morphism.map
    return AttachmentCertificate(
        cert.A,
        cert.B,
        {a: f(c) for a, c in cert.lambdas.items()},
        {b: f(c) for b, c in cert.mus.items()},
    )


def lift_to_nat(
    vectors: Sequence[SemiVector], cert: AttachmentCertificate
) -> List[SemiVector]:
    """Natural vectors ``u_i`` with the same supports and ``sum_A u = sum_B u``.

    Per component, the side with fewer ones gets one of its ones raised by
    the deficit; the raised vector is the smallest index carrying a one.
    """
    _require_bool(vectors)
    if not check_certificate(vectors, cert):
        raise ValueError("certificate does not attach the given Boolean vectors")
    k = len(vectors[0])
    u: List[List[int]] = [list(v.entries) for v in vectors]
    for j in range(k):
        ones_a = [a for a in cert.A if vectors[a].entries[j] == 1]
        ones_b = [b for b in cert.B if vectors[b].entries[j] == 1]
        alpha, beta = len(ones_a), len(ones_b)
        gap = abs(alpha - beta)
        if alpha > beta:
            u[ones_b[0]][j] = gap + 1
        elif alpha < beta:
            u[ones_a[0]][j] = gap + 1
    return [SemiVector(NATURALS, tuple(row)) for row in u]
