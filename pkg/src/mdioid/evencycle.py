"""Deciding ``det+ == det-`` for Boolean matrices without full expansion.

1. If the integer determinant is zero the two components agree.
2. Otherwise the complement matrix (0 and 1 swapped, read in min-plus) has
   a zero-cost assignment ``sigma``: a unit diagonal of ``A``.
3. Relabel columns so ``sigma`` is the main diagonal and draw an arc
   ``i -> j`` for every other zero-cost entry.  A zero-cost permutation of
   the relabelled matrix is a union of cycles of this digraph, and it has
   the opposite parity to ``sigma`` exactly when one of its cycles has even
   length.  So an opposite-parity unit diagonal exists iff the digraph has
   an even directed cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple

from . import _kernels
from .bideterminant import BIDET_CAP, integer_determinant
from .semimodule import SemiMatrix
from .semiring import MINPLUS, UnsupportedSystemError, is_boolean

__all__ = [
    "CYCLE_CAP",
    "EXHAUSTIVE_ASSIGNMENT_CAP",
    "Digraph",
    "DecisionTrace",
    "complement_matrix",
    "optimal_assignment",
    "zero_weight_permutation",
    "build_reduction_digraph",
    "has_even_cycle",
    "decide_bidet_equal",
    "permutation_parity",
]

CYCLE_CAP = 12
EXHAUSTIVE_ASSIGNMENT_CAP = 8


@dataclass(frozen=True)
class Digraph:
    node_count: int
    arcs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        arcs = frozenset(self.arcs)
        for i, j in arcs:
            if not (0 <= i < self.node_count and 0 <= j < self.node_count):
                raise ValueError(f"arc ({i}, {j}) out of range")
        object.__setattr__(self, "arcs", arcs)

    def adjacency_masks(self) -> List[int]:
        adj = [0] * self.node_count
        for i, j in self.arcs:
            adj[i] |= 1 << j
        return adj

    def sorted_arcs(self) -> List[Tuple[int, int]]:
        return sorted(self.arcs)


def permutation_parity(perm: Sequence[int]) -> int:
    """0 for even, 1 for odd."""
    seen = [False] * len(perm)
    parity = 0
    for s in range(len(perm)):
        if seen[s]:
            continue
        length = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _parity_name(bit: int) -> str:
    return "odd" if bit else "even"


def complement_matrix(A: SemiMatrix) -> SemiMatrix:
    """Min-plus matrix with cost 1 where ``A`` is 0 and cost 0 where it is 1."""
    if not is_boolean(A.system):
        raise UnsupportedSystemError("expected a Boolean matrix")
    return SemiMatrix(
        MINPLUS,
        tuple(tuple(Fraction(0) if e else Fraction(1) for e in row) for row in A.entries),
    )


# ---------------------------------------------------------------------------
# optimal assignment


def _exact_ints(cost):
    # integral Fractions become ints; the arithmetic stays exact and is much faster
    return [
        [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in row]
        for row in cost
    ]


def _exhaustive_assignment(cost) -> Optional[Tuple[Fraction, Tuple[int, ...]]]:
    n = len(cost)
    cost = _exact_ints(cost)
    finite_min = []
    for row in cost:
        vals = [c for c in row if c != math.inf]
        if not vals:
            return None
        finite_min.append(min(vals))
    # suffix sums of row minima give an admissible lower bound
    tail = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        tail[i] = tail[i + 1] + finite_min[i]
    best: List = [None, None]
    perm: List[int] = []
    used = [False] * n

    def rec(i, acc):
        # True once the global lower bound is met: nothing later can beat it
        if best[0] is not None and acc + tail[i] > best[0]:
            return False
        if i == n:
            if best[0] is None or acc < best[0]:
                best[0], best[1] = acc, tuple(perm)
            return acc == tail[0]
        row = cost[i]
        for j in range(n):
            if used[j] or row[j] == math.inf:
                continue
            used[j] = True
            perm.append(j)
            done = rec(i + 1, acc + row[j])
            perm.pop()
            used[j] = False
            if done:
                return True
        return False

    rec(0, 0)
    if best[0] is None:
        return None
    return Fraction(best[0]), best[1]


def _hungarian_value(cost) -> Optional[Fraction]:
    """Optimal assignment value with exact arithmetic (potential method)."""
    n = len(cost)
    if n == 0:
        return Fraction(0)
    cost = _exact_ints(cost)
    finite = [c for row in cost for c in row if c != math.inf]
    big = sum(abs(c) for c in finite) + 1
    a = [[big * (n + 1) if c == math.inf else c for c in row] for row in cost]
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = None
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = a[i0 - 1][j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    total = sum(a[p[j] - 1][j - 1] for j in range(1, n + 1))
    if total >= big:
        return None
    return Fraction(total)


def _greedy_lex_assignment(cost) -> Optional[Tuple[Fraction, Tuple[int, ...]]]:
    # fix rows in order, taking the smallest column that keeps the optimum
    opt = _hungarian_value(cost)
    if opt is None:
        return None
    n = len(cost)
    rows = list(range(n))
    cols = list(range(n))
    perm = [0] * n
    acc = Fraction(0)
    for i in range(n):
        r = rows[0]
        for pos, j in enumerate(cols):
            c = cost[r][j]
            if c == math.inf:
                continue
            rest_rows = rows[1:]
            rest_cols = cols[:pos] + cols[pos + 1:]
            sub = [[cost[a][b] for b in rest_cols] for a in rest_rows]
            val = _hungarian_value(sub) if sub else Fraction(0)
            if val is not None and acc + c + val == opt:
                perm[r] = j
                acc += c
                rows = rest_rows
                cols = rest_cols
                break
        else:  # pragma: no cover - the optimum is always extendable
            raise AssertionError("lexicographic assignment lost the optimum")
    return opt, tuple(perm)


def optimal_assignment(cost: Sequence[Sequence]) -> Optional[Tuple[Fraction, Tuple[int, ...]]]:
    """Minimum-cost permutation (``inf`` = forbidden), lexicographically first
    among the optimal ones.  Returns ``(cost, perm)`` or None if every
    permutation hits an ``inf`` entry."""
    n = len(cost)
    if any(len(r) != n for r in cost):
        raise ValueError("assignment needs a square cost matrix")
    if n <= EXHAUSTIVE_ASSIGNMENT_CAP:
        return _exhaustive_assignment(cost)
    return _greedy_lex_assignment(cost)


def _cost_rows(Ac: SemiMatrix):
    if Ac.system is not MINPLUS:
        raise UnsupportedSystemError("expected a min-plus matrix")
    if not Ac.is_square:
        raise ValueError("expected a square matrix")
    return Ac.entries


def zero_weight_permutation(Ac: SemiMatrix) -> Optional[Tuple[int, ...]]:
    """Lexicographically first permutation of total cost 0, or None.

    Entries must be nonnegative (or ``inf``), so 0 is the best possible cost.
    """
    rows = _cost_rows(Ac)
    if any(c < 0 for r in rows for c in r):
        raise ValueError("zero-cost search needs nonnegative costs")
    res = optimal_assignment(rows)
    if res is None or res[0] != 0:
        return None
    return res[1]


def _diagonal_cost(rows, perm) -> Fraction:
    return sum((rows[i][perm[i]] for i in range(len(perm))), Fraction(0))


def build_reduction_digraph(Ac: SemiMatrix, sigma: Sequence[int]) -> Digraph:
    """Arc ``i -> j`` (``i != j``) wherever the relabelled entry
    ``Ac[i, sigma[j]]`` is zero."""
    rows = _cost_rows(Ac)
    n = len(rows)
    if sorted(sigma) != list(range(n)):
        raise ValueError("sigma is not a permutation")
    if _diagonal_cost(rows, sigma) != 0:
        raise ValueError("sigma is not a zero-cost permutation")
    arcs = {
        (i, j) for i in range(n) for j in range(n) if i != j and rows[i][sigma[j]] == 0
    }
    return Digraph(n, frozenset(arcs))


def has_even_cycle(g: Digraph, *, max_n: Optional[int] = CYCLE_CAP) -> Optional[List[int]]:
    """A simple directed cycle of even length, or None.

    Starts are tried in increasing order and a cycle only visits nodes above
    its start, so the cycle returned begins at its smallest node.
    """
    if max_n is not None and g.node_count > max_n:
        raise ValueError(f"digraph with {g.node_count} nodes exceeds the cap of {max_n}")
    return _kernels.even_cycle(g.adjacency_masks(), g.node_count)


@dataclass(frozen=True)
class DecisionTrace:
    branch: str  # "determinant-zero" or "even-cycle"
    determinant: int
    complement: Optional[SemiMatrix]
    permutation: Optional[Tuple[int, ...]]
    parity: Optional[str]
    digraph: Optional[Digraph]
    cycle: Optional[Tuple[int, ...]]
    second_permutation: Optional[Tuple[int, ...]]
    verdict: str  # "equal" or "not-equal"

    @property
    def equal(self) -> bool:
        return self.verdict == "equal"

    def validate(self, A: SemiMatrix) -> bool:
        """Recheck every piece of recorded evidence against ``A``."""
        det = integer_determinant(A)
        if det != self.determinant:
            return False
        if self.branch == "determinant-zero":
            return det == 0 and self.verdict == "equal"
        if self.branch != "even-cycle" or det == 0:
            return False
        Ac = complement_matrix(A)
        if Ac != self.complement:
            return False
        rows = Ac.entries
        sigma = self.permutation
        if sigma is None or _diagonal_cost(rows, sigma) != 0:
            return False
        if self.parity != _parity_name(permutation_parity(sigma)):
            return False
        if self.digraph != build_reduction_digraph(Ac, sigma):
            return False
        if self.cycle is None:
            return self.verdict == "not-equal" and has_even_cycle(self.digraph, max_n=None) is None
        cyc = self.cycle
        if len(cyc) % 2 or len(set(cyc)) != len(cyc):
            return False
        if any((cyc[t], cyc[(t + 1) % len(cyc)]) not in self.digraph.arcs for t in range(len(cyc))):
            return False
        tau = self.second_permutation
        if tau is None or tau != _compose_cycle(sigma, cyc):
            return False
        if _diagonal_cost(rows, tau) != 0:
            return False
        if permutation_parity(tau) == permutation_parity(sigma):
            return False
        return self.verdict == "equal"


def _compose_cycle(sigma: Sequence[int], cycle: Sequence[int]) -> Tuple[int, ...]:
    # tau = sigma o C, where C sends cycle[t] to cycle[t + 1]
    step = list(range(len(sigma)))
    for t, node in enumerate(cycle):
        step[node] = cycle[(t + 1) % len(cycle)]
    return tuple(sigma[step[i]] for i in range(len(sigma)))


def decide_bidet_equal(A: SemiMatrix, *, max_n: Optional[int] = BIDET_CAP) -> DecisionTrace:
    """Decide whether the Boolean bideterminant has equal components."""
    if not is_boolean(A.system):
        raise UnsupportedSystemError("expected a Boolean matrix")
    if not A.is_square:
        raise ValueError(f"expected a square matrix, got {A.rows}x{A.cols}")
    if max_n is not None and A.rows > max_n:
        raise ValueError(f"matrix size {A.rows} exceeds the cap of {max_n}")
    det = integer_determinant(A)
    if det == 0:
        return DecisionTrace("determinant-zero", 0, None, None, None, None, None, None, "equal")
    Ac = complement_matrix(A)
    sigma = zero_weight_permutation(Ac)
    if sigma is None:
        raise AssertionError("nonzero determinant but no unit diagonal")
    g = build_reduction_digraph(Ac, sigma)
    cycle = has_even_cycle(g, max_n=None)
    parity = _parity_name(permutation_parity(sigma))
    if cycle is None:
        return DecisionTrace("even-cycle", det, Ac, sigma, parity, g, None, None, "not-equal")
    cyc = tuple(cycle)
    tau = _compose_cycle(sigma, cyc)
    return DecisionTrace("even-cycle", det, Ac, sigma, parity, g, cyc, tau, "equal")
