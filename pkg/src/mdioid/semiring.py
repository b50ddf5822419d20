"""Commutative semirings, dioids and m-dioids.

A :class:`ScalarSystem` bundles a carrier with its two operations.  Scalars
themselves are plain hashable Python values (ints, ``Fraction``, sorted
tuples for subsets); the system they belong to travels with the vectors and
matrices that hold them.

Finite systems store explicit operation tables, so every axiom can be
checked exhaustively.  The infinite built-ins (naturals, integers,
nonnegative rationals, min-plus) carry a closed-form canonical order and
analytically known flags.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "CARRIER_CAP",
    "UnsupportedSystemError",
    "ScalarSystem",
    "FiniteMonoid",
    "SemiringMorphism",
    "AxiomReport",
    "BOOLEAN",
    "NATURALS",
    "INTEGERS",
    "NONNEG_RATIONALS",
    "MINPLUS",
    "boolean",
    "naturals",
    "integers",
    "nonneg_rationals",
    "minplus",
    "is_boolean",
    "finite_system",
    "modular_ring",
    "power_dioid",
    "rooted_dioid",
    "lagrassa_embed",
    "canonical_leq",
    "verify_axioms",
    "with_verified_flags",
    "characteristic_bool_morphism",
    "identity_morphism",
    "LG_ZERO",
    "LG_M",
]

CARRIER_CAP = 256


class UnsupportedSystemError(ValueError):
    """Raised when an operation needs a capability the system lacks."""


def _default_format(value: Any) -> str:
    return str(value)


@dataclass(frozen=True, eq=False)
class ScalarSystem:
    """A commutative semiring given by its operations.

    ``elements`` is present only for finite carriers.  The three flags are
    tri-state: ``True``/``False`` once known, ``None`` while unchecked.
    ``order`` is the closed-form canonical order for infinite carriers.
    """

    name: str
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    zero: Any
    one: Any
    elements: Optional[tuple] = None
    absorbing: Any = None
    top: Any = None
    is_commutative: Optional[bool] = None
    is_dioid: Optional[bool] = None
    is_mcos: Optional[bool] = None
    is_zerosumfree: Optional[bool] = None
    is_entire: Optional[bool] = None
    order: Optional[Callable[[Any, Any], bool]] = field(default=None, repr=False)
    member: Optional[Callable[[Any], bool]] = field(default=None, repr=False)
    parse: Optional[Callable[[str], Any]] = field(default=None, repr=False)
    format: Callable[[Any], str] = field(default=_default_format, repr=False)

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    def contains(self, value: Any) -> bool:
        if self.elements is not None:
            try:
                return value in self._index
            except TypeError:
                return False
        if self.member is not None:
            return self.member(value)
        return True

    @property
    def _index(self) -> dict:
        # cached element -> position map for finite carriers
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {e: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_index_cache", idx)
        return idx

    def index(self, value: Any) -> int:
        return self._index[value]

    def is_zero(self, value: Any) -> bool:
        return value == self.zero

    def nonzero_elements(self) -> tuple:
        if self.elements is None:
            raise UnsupportedSystemError(f"system {self.name!r} has an infinite carrier")
        return tuple(e for e in self.elements if e != self.zero)

    def sum(self, values: Iterable[Any]) -> Any:
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def prod(self, values: Iterable[Any]) -> Any:
        total = self.one
        for v in values:
            total = self.mul(total, v)
        return total

    def parse_literal(self, text: str) -> Any:
        if self.parse is None:
            raise UnsupportedSystemError(f"system {self.name!r} has no literal syntax")
        value = self.parse(text.strip())
        if not self.contains(value):
            raise ValueError(f"{text!r} is not an element of {self.name}")
        return value

    def __repr__(self) -> str:
        size = "inf" if self.elements is None else len(self.elements)
        return f"ScalarSystem({self.name!r}, |carrier|={size})"


# ---------------------------------------------------------------------------
# finite systems from tables


def _tabulate(elements: Sequence, op: Callable, what: str) -> dict:
    index = {e: i for i, e in enumerate(elements)}
    table = {}
    for a in elements:
        for b in elements:
            c = op(a, b)
            if c not in index:
                raise ValueError(f"{what} is not closed: {a!r}, {b!r} -> {c!r}")
            table[a, b] = c
    return table


def finite_system(
    name: str,
    elements: Sequence,
    add: Callable,
    mul: Callable,
    zero: Any,
    one: Any,
    **flags: Any,
) -> ScalarSystem:
    """Build a finite system, tabulating both operations once."""
    elements = tuple(elements)
    if len(elements) > CARRIER_CAP:
        raise ValueError(f"carrier of size {len(elements)} exceeds cap {CARRIER_CAP}")
    if len(set(elements)) != len(elements):
        raise ValueError("carrier has repeated elements")
    if zero not in elements or one not in elements:
        raise ValueError("zero and one must belong to the carrier")
    add_t = _tabulate(elements, add, "addition")
    mul_t = _tabulate(elements, mul, "multiplication")

    def add_op(a, b, _t=add_t):
        return _t[a, b]

    def mul_op(a, b, _t=mul_t):
        return _t[a, b]

    system = ScalarSystem(name, add_op, mul_op, zero, one, elements=elements, **flags)
    object.__setattr__(system, "_add_table", add_t)
    object.__setattr__(system, "_mul_table", mul_t)
    return system


def _parse_int(text: str) -> int:
    return int(text)


def _parse_bit(text: str) -> int:
    if text not in ("0", "1"):
        raise ValueError(f"Boolean literal must be 0 or 1, got {text!r}")
    return int(text)


def boolean() -> ScalarSystem:
    return finite_system(
        "bool",
        (0, 1),
        lambda a, b: a | b,
        lambda a, b: a & b,
        0,
        1,
        absorbing=1,
        top=1,
        is_commutative=True,
        is_dioid=True,
        is_mcos=True,
        is_zerosumfree=True,
        is_entire=True,
        order=lambda a, b: a <= b,
        parse=_parse_bit,
    )


def _is_nat(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and v >= 0


def naturals() -> ScalarSystem:
    return ScalarSystem(
        "nat",
        lambda a, b: a + b,
        lambda a, b: a * b,
        0,
        1,
        is_commutative=True,
        is_dioid=True,
        is_mcos=False,
        is_zerosumfree=True,
        is_entire=True,
        order=lambda a, b: a <= b,
        member=_is_nat,
        parse=_parse_int,
    )


def integers() -> ScalarSystem:
    # a ring: every a <= b via c = b - a, so the canonical preorder is trivial
    return ScalarSystem(
        "int",
        lambda a, b: a + b,
        lambda a, b: a * b,
        0,
        1,
        is_commutative=True,
        is_dioid=False,
        is_mcos=False,
        is_zerosumfree=False,
        is_entire=True,
        order=lambda a, b: True,
        member=lambda v: isinstance(v, int) and not isinstance(v, bool),
        parse=_parse_int,
    )


def _is_rational(v: Any) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def nonneg_rationals() -> ScalarSystem:
    return ScalarSystem(
        "qplus",
        lambda a, b: a + b,
        lambda a, b: a * b,
        Fraction(0),
        Fraction(1),
        is_commutative=True,
        is_dioid=True,
        is_mcos=False,
        is_zerosumfree=True,
        is_entire=True,
        order=lambda a, b: a <= b,
        member=lambda v: _is_rational(v) and v >= 0,
        parse=Fraction,
    )


def _minplus_add(a, b):
    return a if a <= b else b


def _minplus_mul(a, b):
    if a == math.inf or b == math.inf:
        return math.inf
    return a + b


def _minplus_parse(text: str):
    return math.inf if text in ("inf", "+inf") else Fraction(text)


def _minplus_format(v) -> str:
    return "inf" if v == math.inf else str(v)


def minplus() -> ScalarSystem:
    """``(Q u {+inf}, min, +)`` with exact rational scalars."""
    return ScalarSystem(
        "minplus",
        _minplus_add,
        _minplus_mul,
        math.inf,
        Fraction(0),
        is_commutative=True,
        is_dioid=True,
        is_mcos=False,
        is_zerosumfree=True,
        is_entire=True,
        # min(a, c) = b is solvable iff b <= a
        order=lambda a, b: b <= a,
        member=lambda v: v == math.inf or _is_rational(v),
        parse=_minplus_parse,
        format=_minplus_format,
    )


BOOLEAN = boolean()
NATURALS = naturals()
INTEGERS = integers()
NONNEG_RATIONALS = nonneg_rationals()
MINPLUS = minplus()


def is_boolean(system: ScalarSystem) -> bool:
    return system is BOOLEAN or (system.name == "bool" and system.elements == (0, 1))


def modular_ring(k: int) -> ScalarSystem:
    """``Z/kZ``; flags are left unchecked for :func:`verify_axioms` to fill."""
    if k < 1:
        raise ValueError("modulus must be positive")
    return finite_system(
        f"mod{k}",
        range(k),
        lambda a, b: (a + b) % k,
        lambda a, b: (a * b) % k,
        0,
        1 % k,
        parse=_parse_int,
    )


# ---------------------------------------------------------------------------
# monoids and the three constructions


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite commutative monoid ``(M, x)`` given by its multiplication table.

    ``table[i][j]`` is the index of ``elements[i] * elements[j]``.
    """

    elements: tuple
    table: tuple
    identity: int = 0

    def __post_init__(self):
        k = len(self.elements)
        if k == 0:
            raise ValueError("monoid must be nonempty")
        if len(self.table) != k or any(len(row) != k for row in self.table):
            raise ValueError("multiplication table must be k x k")
        for row in self.table:
            for c in row:
                if not 0 <= c < k:
                    raise ValueError(f"table entry {c} out of range")
        r = range(k)
        t = self.table
        e = self.identity
        if any(t[e][a] != a or t[a][e] != a for a in r):
            raise ValueError(f"element {self.elements[e]!r} is not an identity")
        for a, b in itertools.product(r, r):
            if t[a][b] != t[b][a]:
                raise ValueError("multiplication is not commutative")
        for a, b, c in itertools.product(r, r, r):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError("multiplication is not associative")

    @classmethod
    def from_table(cls, rows: Sequence[Sequence[int]], labels: Optional[Sequence] = None):
        """Element 0 is the identity, matching the monoid file convention."""
        k = len(rows)
        labels = tuple(range(k)) if labels is None else tuple(labels)
        return cls(labels, tuple(tuple(int(c) for c in row) for row in rows), 0)

    @classmethod
    def from_operation(cls, elements: Sequence[Hashable], op: Callable):
        elements = tuple(elements)
        index = {x: i for i, x in enumerate(elements)}
        try:
            table = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
        except KeyError as exc:
            raise ValueError(f"operation is not closed: {exc}") from None
        ids = [
            i
            for i in range(len(elements))
            if all(table[i][j] == j and table[j][i] == j for j in range(len(elements)))
        ]
        if not ids:
            raise ValueError("operation has no identity")
        return cls(elements, table, ids[0])

    @classmethod
    def cyclic(cls, k: int) -> "FiniteMonoid":
        """The group ``Z_k`` under addition mod k."""
        return cls.from_operation(range(k), lambda a, b: (a + b) % k)

    @classmethod
    def trivial(cls) -> "FiniteMonoid":
        return cls((1,), ((0,),), 0)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a, b):
        i = self._pos[a]
        j = self._pos[b]
        return self.elements[self.table[i][j]]

    @property
    def _pos(self) -> dict:
        pos = self.__dict__.get("_pos_cache")
        if pos is None:
            pos = {x: i for i, x in enumerate(self.elements)}
            object.__setattr__(self, "_pos_cache", pos)
        return pos

    @property
    def unit(self):
        return self.elements[self.identity]

    def absorbing_element(self):
        """The top element ``t`` with ``t*a = t`` for all ``a``, or None."""
        for i in range(self.order):
            if all(c == i for c in self.table[i]):
                return self.elements[i]
        return None

    def kernel(self) -> tuple:
        """Minimal ideal ``z*M`` where ``z`` is the product of all elements.

        For a finite commutative monoid this is a subgroup satisfying
        ``a*K = K`` for every ``a``, so ``K`` is multiplicatively absorbing in
        the power-dioid.  It is ``{t}`` when the monoid has a top element.
        """
        z = self.identity
        for i in range(self.order):
            z = self.table[z][i]
        members = {self.table[z][j] for j in range(self.order)}
        return tuple(self.elements[i] for i in sorted(members))


def _subset_key(monoid: FiniteMonoid):
    pos = monoid._pos
    return lambda x: pos[x]


def _pointwise(monoid: FiniteMonoid):
    key = _subset_key(monoid)

    def mul(a: tuple, b: tuple) -> tuple:
        return tuple(sorted({monoid.mul(x, y) for x in a for y in b}, key=key))

    def add(a: tuple, b: tuple) -> tuple:
        return tuple(sorted(set(a) | set(b), key=key))

    return add, mul


def _format_subset(value: tuple) -> str:
    return "{" + ",".join(str(x) for x in value) + "}"


def _subset_parser(monoid: FiniteMonoid):
    key = _subset_key(monoid)
    lookup = {str(x): x for x in monoid.elements}

    def parse(text: str) -> tuple:
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"subset literal must be braced, got {text!r}")
        body = text[1:-1].strip()
        if not body:
            return ()
        try:
            items = {lookup[tok.strip()] for tok in body.split(",")}
        except KeyError as exc:
            raise ValueError(f"unknown monoid element {exc}") from None
        return tuple(sorted(items, key=key))

    return parse


def power_dioid(monoid: FiniteMonoid) -> ScalarSystem:
    """``(P(M), union, pointwise product)``.

    Payloads are sorted tuples of monoid elements.  ``m`` is the monoid's
    minimal ideal, which is ``{t}`` when ``M`` has a top element ``t``.
    """
    k = monoid.order
    if 2**k > CARRIER_CAP:
        raise ValueError(f"power-dioid of a {k}-element monoid exceeds cap {CARRIER_CAP}")
    key = _subset_key(monoid)
    subsets = [
        tuple(sorted(c, key=key))
        for r in range(k + 1)
        for c in itertools.combinations(monoid.elements, r)
    ]
    add, mul = _pointwise(monoid)
    full = tuple(monoid.elements)
    return finite_system(
        "power",
        subsets,
        add,
        mul,
        (),
        (monoid.unit,),
        absorbing=monoid.kernel(),
        top=full,
        is_commutative=True,
        is_dioid=True,
        is_mcos=True,
        is_zerosumfree=True,
        is_entire=True,
        parse=_subset_parser(monoid),
        format=_format_subset,
    )


def rooted_dioid(monoid: FiniteMonoid) -> ScalarSystem:
    """Identity-containing subsets of ``M`` plus the empty set."""
    k = monoid.order
    if 2 ** (k - 1) + 1 > CARRIER_CAP:
        raise ValueError(f"rooted dioid of a {k}-element monoid exceeds cap {CARRIER_CAP}")
    key = _subset_key(monoid)
    others = [x for x in monoid.elements if x != monoid.unit]
    subsets = [()] + [
        tuple(sorted((monoid.unit,) + c, key=key))
        for r in range(k)
        for c in itertools.combinations(others, r)
    ]
    add, mul = _pointwise(monoid)
    full = tuple(monoid.elements)
    return finite_system(
        "rooted",
        subsets,
        add,
        mul,
        (),
        (monoid.unit,),
        absorbing=full,
        top=full,
        is_commutative=True,
        is_dioid=True,
        is_mcos=True,
        is_zerosumfree=True,
        is_entire=True,
        parse=_subset_parser(monoid),
        format=_format_subset,
    )


LG_ZERO = ("0",)
LG_M = ("m",)


def lagrassa_embed(monoid: FiniteMonoid) -> ScalarSystem:
    """Adjoin an absorbing ``m`` and a zero to ``M``; any two nonzero sum to ``m``.

    Monoid elements are carried as ``("e", x)``.
    """
    if monoid.order + 2 > CARRIER_CAP:
        raise ValueError("LaGrassa embedding exceeds carrier cap")
    carrier = (LG_ZERO,) + tuple(("e", x) for x in monoid.elements) + (LG_M,)

    def add(a, b):
        if a == LG_ZERO:
            return b
        if b == LG_ZERO:
            return a
        return LG_M

    def mul(a, b):
        if a == LG_ZERO or b == LG_ZERO:
            return LG_ZERO
        if a == LG_M or b == LG_M:
            return LG_M
        return ("e", monoid.mul(a[1], b[1]))

    lookup = {str(x): x for x in monoid.elements}

    def parse(text: str):
        if text == "0":
            return LG_ZERO
        if text == "m":
            return LG_M
        if text.startswith("e") and text[1:] in lookup:
            return ("e", lookup[text[1:]])
        raise ValueError(f"bad LaGrassa literal {text!r}")

    def fmt(v) -> str:
        if v == LG_ZERO:
            return "0"
        if v == LG_M:
            return "m"
        return f"e{v[1]}"

    return finite_system(
        "lagrassa",
        carrier,
        add,
        mul,
        LG_ZERO,
        ("e", monoid.unit),
        absorbing=LG_M,
        top=LG_M,
        is_commutative=True,
        is_dioid=True,
        is_mcos=True,
        is_zerosumfree=True,
        is_entire=True,
        parse=parse,
        format=fmt,
    )


# ---------------------------------------------------------------------------
# order and axioms


def canonical_leq(system: ScalarSystem, a: Any, b: Any) -> bool:
    """``a <= b`` iff ``a + c = b`` for some ``c`` in the carrier."""
    if system.elements is not None:
        return any(system.add(a, c) == b for c in system.elements)
    if system.order is not None:
        return system.order(a, b)
    raise UnsupportedSystemError(f"no canonical order available for {system.name!r}")


@dataclass
class AxiomReport:
    system: str
    checks: dict
    counterexamples: dict
    absorbing: Any
    top: Any
    is_commutative: bool
    is_dioid: bool
    is_mcos: bool
    is_zerosumfree: bool
    is_entire: bool

    @property
    def semiring_ok(self) -> bool:
        keys = (
            "add_associative",
            "add_commutative",
            "add_identity",
            "mul_associative",
            "mul_identity",
            "distributive",
            "zero_absorbing",
        )
        return all(self.checks[k] for k in keys)

    @property
    def all_passed(self) -> bool:
        return all(self.checks.values())


def _tables(system: ScalarSystem):
    elems = system.elements
    n = len(elems)
    idx = system._index
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            add[i, j] = idx[system.add(a, b)]
            mul[i, j] = idx[system.mul(a, b)]
    return add, mul


def _first_false(mask: np.ndarray):
    bad = np.argwhere(~mask)
    return tuple(int(x) for x in bad[0]) if len(bad) else None


def verify_axioms(system: ScalarSystem) -> AxiomReport:
    """Exhaustively check the semiring, dioid and m-dioid axioms."""
    if system.elements is None:
        raise UnsupportedSystemError(f"{system.name!r} has an infinite carrier")
    elems = system.elements
    n = len(elems)
    A, M = _tables(system)
    z = system.index(system.zero)
    o = system.index(system.one)
    r = np.arange(n)
    checks: dict = {}
    cex: dict = {}

    def record(name, ok, witness=None):
        checks[name] = bool(ok)
        if not ok and witness is not None:
            cex[name] = tuple(elems[i] for i in witness)

    def assoc(T):
        for i in range(n):
            # (a_i * b) * c  vs  a_i * (b * c)
            lhs = T[T[i, :], :]
            rhs = T[i, T]
            ok = lhs == rhs
            if not ok.all():
                j, k = _first_false(ok)
                return False, (i, j, k)
        return True, None

    ok, w = assoc(A)
    record("add_associative", ok, w)
    ok = A == A.T
    record("add_commutative", ok.all(), _first_false(ok))
    record("add_identity", (A[z, :] == r).all() and (A[:, z] == r).all())
    ok, w = assoc(M)
    record("mul_associative", ok, w)
    ok = M == M.T
    record("mul_commutative", ok.all(), _first_false(ok))
    record("mul_identity", (M[o, :] == r).all() and (M[:, o] == r).all())

    dist_ok, dist_w = True, None
    for i in range(n):
        # a*(b+c) vs a*b + a*c, and (b+c)*a vs b*a + c*a
        left = M[i, A] == A[M[i, :][:, None], M[i, :][None, :]]
        right = M[A, i] == A[M[:, i][:, None], M[:, i][None, :]]
        ok = left & right
        if not ok.all():
            j, k = _first_false(ok)
            dist_ok, dist_w = False, (i, j, k)
            break
    record("distributive", dist_ok, dist_w)
    record("zero_absorbing", (M[z, :] == z).all() and (M[:, z] == z).all())

    # canonical preorder: L[i, j] iff j = i + c for some c
    L = np.zeros((n, n), dtype=bool)
    L[r[:, None], A] = True
    anti = ~(L & L.T) | np.eye(n, dtype=bool)
    record("canonical_antisymmetric", anti.all(), _first_false(anti))

    zsf = (A == z) <= ((r[:, None] == z) & (r[None, :] == z))
    record("zerosumfree", zsf.all(), _first_false(zsf))
    nz = r != z
    ent = ~((M == z) & nz[:, None] & nz[None, :])
    record("entire", ent.all(), _first_false(ent))

    # nonzero m with a*m = m for every nonzero a
    candidates = [
        j for j in range(n) if j != z and all(M[i, j] == j for i in range(n) if i != z)
    ]
    absorbing = elems[candidates[0]] if candidates else None
    checks["unique_absorbing"] = len(candidates) <= 1
    record("m_absorbing", bool(candidates))
    if system.absorbing is not None:
        checks["declared_absorbing"] = absorbing == system.absorbing

    tops = [j for j in range(n) if (A[j, :] == j).all()]
    top = elems[tops[0]] if tops else None
    if checks["canonical_antisymmetric"] and checks["add_associative"]:
        total = z
        for j in range(n):
            total = A[total, j]
        checks["top_is_total_sum"] = bool(tops) and int(tops[0]) == int(total)

    is_comm = checks["mul_commutative"]
    semiring = all(
        checks[k]
        for k in (
            "add_associative",
            "add_commutative",
            "add_identity",
            "mul_associative",
            "mul_identity",
            "distributive",
            "zero_absorbing",
        )
    )
    is_dioid = semiring and checks["canonical_antisymmetric"]
    is_mcos = is_dioid and is_comm and absorbing is not None
    return AxiomReport(
        system=system.name,
        checks=checks,
        counterexamples=cex,
        absorbing=absorbing,
        top=top,
        is_commutative=is_comm,
        is_dioid=is_dioid,
        is_mcos=is_mcos,
        is_zerosumfree=checks["zerosumfree"],
        is_entire=checks["entire"],
    )


def with_verified_flags(system: ScalarSystem, report: Optional[AxiomReport] = None) -> ScalarSystem:
    """Copy of a finite ``system`` with its flags filled from ``verify_axioms``."""
    report = report or verify_axioms(system)
    new = dataclasses.replace(
        system,
        absorbing=report.absorbing,
        top=report.top,
        is_commutative=report.is_commutative,
        is_dioid=report.is_dioid,
        is_mcos=report.is_mcos,
        is_zerosumfree=report.is_zerosumfree,
        is_entire=report.is_entire,
    )
    for attr in ("_add_table", "_mul_table"):
        if attr in system.__dict__:
            object.__setattr__(new, attr, system.__dict__[attr])
    return new


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True, eq=False)
class SemiringMorphism:
    source: ScalarSystem
    target: ScalarSystem
    map: Callable[[Any], Any]
    is_entire: bool = False

    def __call__(self, value: Any) -> Any:
        return self.map(value)

    def check_laws(self) -> dict:
        """Exhaustive preservation checks over a finite source carrier."""
        s, t, f = self.source, self.target, self.map
        if s.elements is None:
            raise UnsupportedSystemError("law checks need a finite source carrier")
        elems = s.elements
        pairs = list(itertools.product(elems, elems))
        return {
            "zero": f(s.zero) == t.zero,
            "one": f(s.one) == t.one,
            "additive": all(f(s.add(a, b)) == t.add(f(a), f(b)) for a, b in pairs),
            "multiplicative": all(f(s.mul(a, b)) == t.mul(f(a), f(b)) for a, b in pairs),
            "entire": all(f(a) != t.zero for a in elems if a != s.zero),
        }


def identity_morphism(system: ScalarSystem) -> SemiringMorphism:
    return SemiringMorphism(system, system, lambda a: a, is_entire=True)


def characteristic_bool_morphism(system: ScalarSystem) -> SemiringMorphism:
    """``0 -> 0``, everything else ``-> 1``; requires zerosumfree and entire."""
    zsf, ent = system.is_zerosumfree, system.is_entire
    if (zsf is None or ent is None) and system.elements is not None:
        report = verify_axioms(system)
        zsf, ent = report.is_zerosumfree, report.is_entire
    if zsf is None or ent is None:
        raise UnsupportedSystemError(f"flags of {system.name!r} are unchecked")
    if not (zsf and ent):
        missing = [n for n, ok in (("zerosumfree", zsf), ("entire", ent)) if not ok]
        raise ValueError(
            f"{system.name!r} is not {' and '.join(missing)}; "
            "the characteristic map is not a morphism"
        )
    zero = system.zero
    return SemiringMorphism(system, BOOLEAN, lambda a: 0 if a == zero else 1, is_entire=True)
