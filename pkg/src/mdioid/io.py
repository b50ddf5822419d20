"""Flat-file readers for monoids, vector lists, matrices and set families.

Blank lines and lines starting with ``#`` are ignored everywhere.
"""

from __future__ import annotations

import os
from typing import Dict, List, Optional, Tuple

from .families import SetFamily
from .semimodule import SemiMatrix, SemiVector
from .semiring import (
    BOOLEAN,
    INTEGERS,
    MINPLUS,
    NATURALS,
    NONNEG_RATIONALS,
    FiniteMonoid,
    ScalarSystem,
    lagrassa_embed,
    power_dioid,
    rooted_dioid,
)

__all__ = [
    "InputError",
    "SYSTEM_KINDS",
    "parse_monoid",
    "read_monoid",
    "resolve_system",
    "parse_vectors",
    "parse_matrix",
    "parse_family",
    "read_text",
]

_BUILTINS = {
    "bool": BOOLEAN,
    "nat": NATURALS,
    "int": INTEGERS,
    "qplus": NONNEG_RATIONALS,
    "minplus": MINPLUS,
}
_CONSTRUCTIONS = {"power": power_dioid, "rooted": rooted_dioid, "lagrassa": lagrassa_embed}
SYSTEM_KINDS = tuple(_BUILTINS) + tuple(_CONSTRUCTIONS)


class InputError(ValueError):
    """Malformed input file or literal."""


def read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _content_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def _header(line: str, required: Tuple[str, ...]) -> Dict[str, str]:
    fields = {}
    for tok in line.split():
        key, sep, value = tok.partition("=")
        if not sep or not key:
            raise InputError(f"bad header field {tok!r}")
        fields[key] = value
    missing = [k for k in required if k not in fields]
    if missing:
        raise InputError(f"header is missing {', '.join(missing)}")
    return fields


def _positive_int(fields: Dict[str, str], key: str) -> int:
    try:
        value = int(fields[key])
    except ValueError:
        raise InputError(f"{key} must be an integer, got {fields[key]!r}") from None
    if value < 1:
        raise InputError(f"{key} must be positive")
    return value


def parse_monoid(text: str) -> FiniteMonoid:
    """``order=<k>`` then k rows of k element indices; element 0 is the identity."""
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty monoid file")
    k = _positive_int(_header(lines[0][1], ("order",)), "order")
    rows = lines[1:]
    if len(rows) != k:
        raise InputError(f"expected {k} table rows, found {len(rows)}")
    table = []
    for no, line in rows:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise InputError(f"line {no}: non-integer table entry") from None
        if len(row) != k:
            raise InputError(f"line {no}: expected {k} entries, found {len(row)}")
        table.append(row)
    try:
        return FiniteMonoid.from_table(table)
    except ValueError as exc:
        raise InputError(f"invalid monoid: {exc}") from None


def read_monoid(path: str) -> FiniteMonoid:
    return parse_monoid(read_text(path))


def resolve_system(selector: str, *, base_dir: Optional[str] = None) -> ScalarSystem:
    """``bool``, ``nat``, ``int``, ``qplus``, ``minplus`` or ``<kind>:<monoid-file>``
    with kind one of ``power``, ``rooted``, ``lagrassa``."""
    if selector in _BUILTINS:
        return _BUILTINS[selector]
    kind, sep, path = selector.partition(":")
    if not sep or kind not in _CONSTRUCTIONS or not path:
        raise InputError(f"unknown system selector {selector!r}")
    if base_dir and not os.path.isabs(path):
        path = os.path.join(base_dir, path)
    monoid = read_monoid(path)
    try:
        return _CONSTRUCTIONS[kind](monoid)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _system_for(fields: Dict[str, str], system: Optional[ScalarSystem], selector_kind: Optional[str], base_dir):
    declared = fields.get("system")
    if system is not None:
        if declared is not None and selector_kind is not None and declared.partition(":")[0] != selector_kind:
            raise InputError(f"file declares system {declared!r} but {selector_kind!r} was selected")
        return system
    if declared is None:
        raise InputError("no system given in the header or on the command line")
    return resolve_system(declared, base_dir=base_dir)


def _literal_row(system: ScalarSystem, no: int, line: str, width: int) -> tuple:
    toks = line.split()
    if len(toks) != width:
        raise InputError(f"line {no}: expected {width} entries, found {len(toks)}")
    try:
        return tuple(system.parse_literal(t) for t in toks)
    except ValueError as exc:
        raise InputError(f"line {no}: {exc}") from None


def parse_vectors(
    text: str,
    system: Optional[ScalarSystem] = None,
    *,
    selector_kind: Optional[str] = None,
    base_dir: Optional[str] = None,
) -> Tuple[ScalarSystem, List[SemiVector]]:
    """``system=<name> dim=<k>`` then one vector per line."""
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty vector file")
    fields = _header(lines[0][1], ("dim",))
    k = _positive_int(fields, "dim")
    system = _system_for(fields, system, selector_kind, base_dir)
    vectors = [SemiVector(system, _literal_row(system, no, line, k)) for no, line in lines[1:]]
    return system, vectors


def parse_matrix(
    text: str,
    system: Optional[ScalarSystem] = None,
    *,
    selector_kind: Optional[str] = None,
    base_dir: Optional[str] = None,
) -> SemiMatrix:
    """``system=<name> n=<int>`` then n rows of n entries."""
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty matrix file")
    fields = _header(lines[0][1], ("n",))
    n = _positive_int(fields, "n")
    system = _system_for(fields, system, selector_kind, base_dir)
    rows = lines[1:]
    if len(rows) != n:
        raise InputError(f"expected {n} matrix rows, found {len(rows)}")
    return SemiMatrix(system, tuple(_literal_row(system, no, line, n) for no, line in rows))


def parse_family(text: str, *, allow_duplicates: bool = False) -> SetFamily:
    """``n=<int>`` then one set per line: comma-separated elements, ``-`` for empty."""
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty family file")
    n = _positive_int(_header(lines[0][1], ("n",)), "n")
    sets = []
    for no, line in lines[1:]:
        if line == "-":
            sets.append(frozenset())
            continue
        try:
            sets.append(frozenset(int(tok) for tok in line.split(",")))
        except ValueError:
            raise InputError(f"line {no}: bad set {line!r}") from None
    try:
        return SetFamily(n, tuple(sets), allow_duplicates=allow_duplicates)
    except ValueError as exc:
        raise InputError(str(exc)) from None
