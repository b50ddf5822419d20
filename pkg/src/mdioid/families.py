"""Families of subsets of ``{1..n}`` and their union properties.

*Distinct union*: no two different subfamilies have the same union.
*Disparate union*: no two disjoint subfamilies, not both empty, have the
same union.  Set contents are the ground elements ``1..n``; positions of sets
within a family are 0-based like every other index in the library.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from . import _kernels
from .bideterminant import BIDET_CAP, Bideterminant, bidet, bool_attached_by_bidet
from .evencycle import decide_bidet_equal
from .semimodule import SemiMatrix, attach_bruteforce
from .semiring import BOOLEAN

__all__ = [
    "FAMILY_CAP",
    "ENUMERATION_CAP",
    "SetFamily",
    "UnionWitness",
    "MaximalityVerdict",
    "incidence_matrix",
    "check_distinct_union",
    "check_disparate_union",
    "certify_maximal",
    "enumerate_disparate_maximal",
    "verify_unique_distinct_maximal",
    "singletons",
]

FAMILY_CAP = 20
ENUMERATION_CAP = 4


@dataclass(frozen=True)
class SetFamily:
    n: int
    sets: Tuple[FrozenSet[int], ...]
    allow_duplicates: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground set size must be at least 1")
        sets = tuple(frozenset(s) for s in self.sets)
        for s in sets:
            bad = [e for e in s if not (isinstance(e, int) and 1 <= e <= self.n)]
            if bad:
                raise ValueError(f"element {bad[0]!r} outside 1..{self.n}")
        if not self.allow_duplicates and len(set(sets)) != len(sets):
            raise ValueError("family contains a repeated set")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int], **kw) -> "SetFamily":
        return cls(n, tuple(_from_mask(m) for m in masks), **kw)

    def __len__(self) -> int:
        return len(self.sets)

    def masks(self) -> List[int]:
        return [_to_mask(s) for s in self.sets]

    def union(self, indices: Iterable[int]) -> FrozenSet[int]:
        out: set = set()
        for i in indices:
            out |= self.sets[i]
        return frozenset(out)

    def canonical(self) -> "SetFamily":
        """Same family with sets sorted by bitmask."""
        return SetFamily(
            self.n, tuple(sorted(self.sets, key=_to_mask)), allow_duplicates=self.allow_duplicates
        )


def _to_mask(s: Iterable[int]) -> int:
    m = 0
    for e in s:
        m |= 1 << (e - 1)
    return m


def _from_mask(m: int) -> FrozenSet[int]:
    return frozenset(i + 1 for i in range(m.bit_length()) if (m >> i) & 1)


def _bits(mask: int) -> Tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def singletons(n: int) -> SetFamily:
    return SetFamily(n, tuple(frozenset({i}) for i in range(1, n + 1)))


@dataclass(frozen=True)
class UnionWitness:
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    common_union: FrozenSet[int]

    def verify(self, f: SetFamily, *, disjoint: bool = True) -> bool:
        if not self.A and not self.B:
            return False
        if disjoint and set(self.A) & set(self.B):
            return False
        if set(self.A) == set(self.B):
            return False
        return f.union(self.A) == self.common_union == f.union(self.B)

    def one_based(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(a + 1 for a in self.A), tuple(b + 1 for b in self.B)


def incidence_matrix(f: SetFamily) -> SemiMatrix:
    """n x m Boolean matrix whose column j is the indicator of set j."""
    if not f.sets:
        raise ValueError("the empty family has no incidence matrix")
    return SemiMatrix(
        BOOLEAN,
        tuple(tuple(int(e in s) for s in f.sets) for e in range(1, f.n + 1)),
    )


def _cap(f: SetFamily, cap: Optional[int]) -> None:
    if cap is not None and len(f) > cap:
        raise ValueError(f"{len(f)} sets exceed the cap of {cap}")


def check_distinct_union(f: SetFamily, *, max_sets: Optional[int] = FAMILY_CAP) -> Optional[UnionWitness]:
    """First pair of different subfamilies with equal unions, or None.

    Subfamilies are visited in increasing bitmask order; the witness is
    ``(later, earlier)``.  The two index sets need not be disjoint.
    """
    _cap(f, max_sets)
    hit = _kernels.union_collision(f.masks())
    if hit is None:
        return None
    later, earlier = _bits(hit[0]), _bits(hit[1])
    w = UnionWitness(later, earlier, f.union(later))
    if not w.verify(f, disjoint=False):  # pragma: no cover - kernel defect
        raise AssertionError("union collision failed to re-verify")
    return w


def _witness_from_brute(f: SetFamily) -> Optional[UnionWitness]:
    cert = attach_bruteforce(incidence_matrix(f).columns(), max_count=FAMILY_CAP)
    if cert is None:
        return None
    w = UnionWitness(cert.A, cert.B, f.union(cert.A))
    if not w.verify(f):  # pragma: no cover
        raise AssertionError("attachment certificate is not a union witness")
    return w


def _require_square_family(f: SetFamily) -> None:
    if len(f) != f.n:
        raise ValueError(f"needs exactly n = {f.n} sets, got {len(f)}")
    if f.n > BIDET_CAP:
        raise ValueError(f"n = {f.n} exceeds the cap of {BIDET_CAP}")


def check_disparate_union(
    f: SetFamily, method: str = "brute", *, max_sets: Optional[int] = FAMILY_CAP
) -> Optional[UnionWitness]:
    """Two disjoint subfamilies with equal unions, or None if the property holds.

    ``brute`` searches sign patterns on the incidence columns.  ``bidet``
    and ``fast`` decide through the Boolean bideterminant (by expansion and
    by the even-cycle procedure) for exactly ``n`` sets; a witness is then
    recovered by the search.  With more than ``n`` sets the property always
    fails and both go straight to the search; fewer than ``n`` is rejected.
    """
    if method not in ("brute", "bidet", "fast"):
        raise ValueError(f"unknown method {method!r}")
    if not f.sets:
        return None
    if method == "brute":
        _cap(f, max_sets)
        return _witness_from_brute(f)
    if len(f) > f.n:
        # more than n vectors in B^n are always attached; only the witness is searched
        _cap(f, max_sets)
        w = _witness_from_brute(f)
        if w is None:  # pragma: no cover
            raise AssertionError(f"{len(f)} subsets of [{f.n}] without a witness")
        return w
    _require_square_family(f)
    A = incidence_matrix(f)
    if method == "bidet":
        attached = bool_attached_by_bidet(A)
    else:
        trace = decide_bidet_equal(A)
        if not trace.validate(A):  # pragma: no cover
            raise AssertionError("decision trace failed to re-validate")
        attached = trace.equal
    if not attached:
        return None
    w = _witness_from_brute(f)
    if w is None:  # pragma: no cover - the criterion and the search disagree
        raise AssertionError(f"{method} reports attached columns but no witness exists")
    return w


@dataclass(frozen=True)
class MaximalityVerdict:
    bideterminant: Bideterminant
    holds: bool


def certify_maximal(f: SetFamily) -> MaximalityVerdict:
    """An n-set family has the disparate union property iff its incidence
    bideterminant is (1, 0) or (0, 1)."""
    _require_square_family(f)
    bd = bidet(incidence_matrix(f))
    return MaximalityVerdict(bd, tuple(bd) in ((1, 0), (0, 1)))


def _enum_cap(n: int) -> None:
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_CAP}")


def enumerate_disparate_maximal(n: int) -> List[SetFamily]:
    """All families of n distinct nonempty subsets of [n] with the disparate
    union property, in canonical (bitmask) order.

    Also confirms that every family of n + 1 distinct subsets fails it.
    """
    _enum_cap(n)
    subsets = range(1, 1 << n)
    found = [
        fam
        for fam in (SetFamily.from_masks(n, c) for c in itertools.combinations(subsets, n))
        if certify_maximal(fam).holds
    ]
    for c in itertools.combinations(range(1 << n), n + 1):
        if _kernels.sign_pattern_attach(list(c)) is None:
            raise AssertionError(f"{n + 1} subsets of [{n}] with the disparate union property: {c}")
    return found


def _distinct_union_families(n: int):
    """Every family with the distinct union property, by depth-first extension.

    The property passes to subfamilies, so extending only passing families
    reaches all of them.  Each node carries the set of its subfamily unions.
    """
    full = 1 << n

    def rec(start, family, unions):
        yield family
        for s in range(start, full):
            shifted = {u | s for u in unions}
            if len(shifted) == len(unions) and not (shifted & unions):
                yield from rec(s + 1, family + (s,), unions | shifted)

    yield from rec(0, (), frozenset({0}))


def verify_unique_distinct_maximal(n: int) -> bool:
    """The singletons are the only distinct-union family with at least n sets."""
    _enum_cap(n)
    big = [fam for fam in _distinct_union_families(n) if len(fam) >= n]
    return big == [tuple(1 << i for i in range(n))]
