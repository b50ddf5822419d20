"""Command-line front end.

Exit status: 0 when the property holds or the computation succeeds, 1 when
it fails and a witness is printed, 2 on usage or input errors.  Witness
indices are 1-based.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, TextIO

from . import __version__
from .bideterminant import BIDET_CAP, bidet, bidet_property_suite
from .evencycle import decide_bidet_equal
from .families import (
    ENUMERATION_CAP,
    FAMILY_CAP,
    certify_maximal,
    check_disparate_union,
    check_distinct_union,
    enumerate_disparate_maximal,
)
from .io import InputError, parse_family, parse_matrix, parse_vectors, read_text, resolve_system
from .semimodule import (
    BOOL_ATTACH_CAP,
    FINITE_ATTACH_CAP,
    AttachmentCertificate,
    attach_bruteforce,
    attach_mcos,
    attach_via_real,
    check_certificate,
    lift_to_nat,
)
from .semiring import BOOLEAN, UnsupportedSystemError, characteristic_bool_morphism, verify_axioms

DEFAULT_SEED = 20240517
CAP_ENV = "MDIOID_CAP"

SUBCOMMANDS = (
    "verify-axioms",
    "bidet",
    "bidet-properties",
    "attach",
    "lift",
    "decide-equal",
    "check-distinct",
    "check-disparate",
    "certify-maximal",
    "enumerate-maximal",
)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    system: Optional[str] = None
    input: Optional[str] = None
    method: Optional[str] = None
    format: str = "text"
    seed: int = DEFAULT_SEED
    cap: Optional[int] = None
    n: Optional[int] = None
    samples: int = 1000
    a: Optional[str] = None
    b: Optional[str] = None
    allow_duplicates: bool = False


class _Emitter:
    """Writes one record per result, as ``key=value`` text or a JSON line."""

    def __init__(self, out: TextIO, fmt: str):
        self.out = out
        self.fmt = fmt

    def record(self, kind: str, fields: Dict[str, Any]) -> None:
        if self.fmt == "machine":
            payload = {"record": kind}
            payload.update(fields)
            self.out.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
        else:
            parts = [f"{k}={_text(v)}" for k, v in fields.items()]
            self.out.write(" ".join(parts) + "\n")


def _text(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        if v and isinstance(v[0], (list, tuple)):
            return ";".join(_text(x) for x in v)
        return ",".join(str(x) for x in v) if v else "{}"
    return str(v)


def _one_based(idx) -> List[int]:
    return [i + 1 for i in idx]


def _effective_cap(config: RunConfig, limit: int) -> int:
    cap = config.cap
    if cap is None:
        return limit
    if cap < 1:
        raise UsageError("cap must be positive")
    if cap > limit:
        raise UsageError(f"cap {cap} exceeds the module limit of {limit}")
    return cap


def _require_input(config: RunConfig) -> str:
    if not config.input:
        raise UsageError(f"{config.subcommand} needs an input file")
    return config.input


def _input_text(config: RunConfig):
    """File contents and the directory for relative monoid paths.

    An input that is not a file but starts with a ``key=value`` header is
    taken as an inline literal, with ``;`` separating lines.
    """
    src = _require_input(config)
    if not os.path.exists(src) and "=" in src.split(";", 1)[0]:
        return src.replace(";", "\n"), os.getcwd()
    return read_text(src), os.path.dirname(os.path.abspath(src))


def _selected_system(config: RunConfig):
    if config.system is None:
        return None, None
    return resolve_system(config.system), config.system.partition(":")[0]


def _load_vectors(config: RunConfig):
    text, base_dir = _input_text(config)
    system, kind = _selected_system(config)
    return parse_vectors(text, system, selector_kind=kind, base_dir=base_dir)


def _load_matrix(config: RunConfig):
    text, base_dir = _input_text(config)
    system, kind = _selected_system(config)
    return parse_matrix(text, system, selector_kind=kind, base_dir=base_dir)


def _load_family(config: RunConfig):
    text, _ = _input_text(config)
    return parse_family(text, allow_duplicates=config.allow_duplicates)


def _cert_fields(cert: AttachmentCertificate, system) -> Dict[str, Any]:
    fmt = system.format
    return {
        "A": _one_based(cert.A),
        "B": _one_based(cert.B),
        "lambdas": [fmt(cert.lambdas[a]) for a in cert.A],
        "mus": [fmt(cert.mus[b]) for b in cert.B],
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_verify_axioms(config: RunConfig, emit: _Emitter) -> int:
    if config.system is None:
        raise UsageError("verify-axioms needs --system")
    system = resolve_system(config.system)
    if not system.is_finite:
        raise UsageError(f"{config.system} has an infinite carrier; axioms are known, not checked")
    report = verify_axioms(system)
    fmt = system.format
    for name, ok in report.checks.items():
        fields: Dict[str, Any] = {"check": name, "pass": ok}
        if not ok and name in report.counterexamples:
            fields["counterexample"] = [fmt(x) for x in report.counterexamples[name]]
        emit.record("check", fields)
    emit.record(
        "summary",
        {
            "system": system.name,
            "size": len(system.elements),
            "all_pass": report.all_passed,
            "commutative": report.is_commutative,
            "dioid": report.is_dioid,
            "mcos": report.is_mcos,
            "zerosumfree": report.is_zerosumfree,
            "entire": report.is_entire,
            "m": None if report.absorbing is None else fmt(report.absorbing),
            "top": None if report.top is None else fmt(report.top),
        },
    )
    return 0 if report.all_passed else 1


def _cmd_bidet(config: RunConfig, emit: _Emitter) -> int:
    A = _load_matrix(config)
    bd = bidet(A, max_n=_effective_cap(config, BIDET_CAP))
    fmt = A.system.format
    emit.record("bidet", {"plus": fmt(bd.plus), "minus": fmt(bd.minus)})
    return 0


def _cmd_bidet_properties(config: RunConfig, emit: _Emitter) -> int:
    if config.system is None:
        raise UsageError("bidet-properties needs --system")
    n = 3 if config.n is None else config.n
    if not 1 <= n <= 4:
        raise UsageError("bidet-properties supports 1 <= n <= 4")
    system = resolve_system(config.system)
    result = bidet_property_suite(system, n, samples=config.samples, seed=config.seed)
    failed = False
    for name, (passed, checked) in result.items():
        emit.record("property", {"property": name, "passed": passed, "checked": checked})
        failed |= passed != checked
    return 1 if failed else 0


def _attach_cap(config: RunConfig, system) -> int:
    generic = not (system is BOOLEAN or system.is_mcos)
    return _effective_cap(config, FINITE_ATTACH_CAP if generic else BOOL_ATTACH_CAP)


def _cmd_attach(config: RunConfig, emit: _Emitter) -> int:
    system, vectors = _load_vectors(config)
    method = config.method or "brute"
    if method == "brute":
        cert = attach_bruteforce(vectors, max_count=_attach_cap(config, system))
    elif method == "mcos":
        cert = attach_mcos(vectors, max_count=_effective_cap(config, BOOL_ATTACH_CAP))
    elif method == "real":
        cert = attach_via_real(vectors)
    else:
        raise UsageError(f"unknown attach method {method!r}")
    if cert is None:
        fields: Dict[str, Any] = {"attached": False, "method": method}
        if method == "real":
            # real independence says nothing about Boolean detachment
            fields["note"] = "independent-over-reals"
        emit.record("attach", fields)
        return 0
    if not check_certificate(vectors, cert):  # pragma: no cover
        raise AssertionError("certificate failed to re-verify")
    emit.record("attach", {"attached": True, "method": method, **_cert_fields(cert, system)})
    return 1


def _index_list(text: str, count: int) -> tuple:
    if text.strip() in ("", "-"):
        return ()
    try:
        idx = tuple(int(t) - 1 for t in text.split(","))
    except ValueError:
        raise UsageError(f"bad index list {text!r}") from None
    if any(not 0 <= i < count for i in idx):
        raise UsageError(f"index out of range in {text!r}")
    return idx


def _cmd_lift(config: RunConfig, emit: _Emitter) -> int:
    system, vectors = _load_vectors(config)
    if system is not BOOLEAN:
        raise UsageError("lift needs Boolean vectors")
    if config.a is not None or config.b is not None:
        A = _index_list(config.a or "", len(vectors))
        B = _index_list(config.b or "", len(vectors))
        cert = AttachmentCertificate.uniform(A, B, 1)
        if not check_certificate(vectors, cert):
            raise InputError("the given index sets do not attach the vectors")
    else:
        cert = attach_bruteforce(vectors, max_count=_effective_cap(config, BOOL_ATTACH_CAP))
        if cert is None:
            emit.record("lift", {"attached": False})
            return 0
    lifted = lift_to_nat(vectors, cert)
    phi = characteristic_bool_morphism(lifted[0].system)
    left = [sum(lifted[a].entries[t] for a in cert.A) for t in range(len(vectors[0]))]
    right = [sum(lifted[b].entries[t] for b in cert.B) for t in range(len(vectors[0]))]
    if left != right or any(
        tuple(phi(e) for e in u.entries) != v.entries for u, v in zip(lifted, vectors)
    ):  # pragma: no cover
        raise AssertionError("lifted vectors failed to re-verify")
    emit.record("lift", {"attached": True, "A": _one_based(cert.A), "B": _one_based(cert.B), "sum": left})
    for i, u in enumerate(lifted, 1):
        emit.record("vector", {"index": i, "entries": list(u.entries)})
    return 0


def _cmd_decide_equal(config: RunConfig, emit: _Emitter) -> int:
    A = _load_matrix(config)
    if A.system is not BOOLEAN:
        raise UsageError("decide-equal needs a Boolean matrix")
    trace = decide_bidet_equal(A, max_n=_effective_cap(config, BIDET_CAP))
    if not trace.validate(A):  # pragma: no cover
        raise AssertionError("decision trace failed to re-validate")
    emit.record(
        "decision",
        {
            "verdict": trace.verdict,
            "branch": trace.branch,
            "determinant": trace.determinant,
            "permutation": None if trace.permutation is None else _one_based(trace.permutation),
            "parity": trace.parity,
            "cycle": None if trace.cycle is None else _one_based(trace.cycle),
            "second_permutation": None
            if trace.second_permutation is None
            else _one_based(trace.second_permutation),
        },
    )
    return 1 if trace.equal else 0


def _witness_fields(w) -> Dict[str, Any]:
    A, B = w.one_based()
    return {"A": list(A), "B": list(B), "union": sorted(w.common_union)}


def _cmd_check_distinct(config: RunConfig, emit: _Emitter) -> int:
    f = _load_family(config)
    w = check_distinct_union(f, max_sets=_effective_cap(config, FAMILY_CAP))
    if w is None:
        emit.record("distinct", {"holds": True, "sets": len(f)})
        return 0
    if not w.verify(f, disjoint=False):  # pragma: no cover
        raise AssertionError("witness failed to re-verify")
    emit.record("distinct", {"holds": False, "sets": len(f), **_witness_fields(w)})
    return 1


def _cmd_check_disparate(config: RunConfig, emit: _Emitter) -> int:
    f = _load_family(config)
    method = config.method or "brute"
    if method not in ("brute", "bidet", "fast"):
        raise UsageError(f"unknown method {method!r}")
    limit = FAMILY_CAP if method == "brute" or len(f) > f.n else BIDET_CAP
    cap = _effective_cap(config, limit)
    if len(f) > cap:
        raise UsageError(f"{len(f)} sets exceed the cap of {cap}")
    w = check_disparate_union(f, method)
    if w is None:
        emit.record("disparate", {"holds": True, "method": method, "sets": len(f)})
        return 0
    if not w.verify(f):  # pragma: no cover
        raise AssertionError("witness failed to re-verify")
    emit.record("disparate", {"holds": False, "method": method, "sets": len(f), **_witness_fields(w)})
    return 1


def _cmd_certify_maximal(config: RunConfig, emit: _Emitter) -> int:
    f = _load_family(config)
    if len(f) > _effective_cap(config, BIDET_CAP):
        raise UsageError("family exceeds the cap")
    verdict = certify_maximal(f)
    fields: Dict[str, Any] = {
        "holds": verdict.holds,
        "plus": verdict.bideterminant.plus,
        "minus": verdict.bideterminant.minus,
    }
    if verdict.holds:
        emit.record("maximal", fields)
        return 0
    w = check_disparate_union(f, "brute")
    if w is None or not w.verify(f):  # pragma: no cover
        raise AssertionError("criterion and witness search disagree")
    emit.record("maximal", {**fields, **_witness_fields(w)})
    return 1


def _cmd_enumerate_maximal(config: RunConfig, emit: _Emitter) -> int:
    if config.n is None:
        raise UsageError("enumerate-maximal needs --n")
    if not 1 <= config.n <= _effective_cap(config, ENUMERATION_CAP):
        raise UsageError(f"--n must be between 1 and {ENUMERATION_CAP}")
    found = enumerate_disparate_maximal(config.n)
    for fam in found:
        emit.record("family", {"sets": [sorted(s) for s in fam.sets]})
    emit.record("enumeration", {"n": config.n, "count": len(found)})
    return 0


_DISPATCH = {
    "verify-axioms": _cmd_verify_axioms,
    "bidet": _cmd_bidet,
    "bidet-properties": _cmd_bidet_properties,
    "attach": _cmd_attach,
    "lift": _cmd_lift,
    "decide-equal": _cmd_decide_equal,
    "check-distinct": _cmd_check_distinct,
    "check-disparate": _cmd_check_disparate,
    "certify-maximal": _cmd_certify_maximal,
    "enumerate-maximal": _cmd_enumerate_maximal,
}


def run(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    if config.subcommand not in _DISPATCH:
        err.write(f"error: unknown subcommand {config.subcommand!r}\n")
        return 2
    if config.format not in ("text", "machine"):
        err.write(f"error: unknown format {config.format!r}\n")
        return 2
    try:
        return _DISPATCH[config.subcommand](config, _Emitter(out, config.format))
    except (UsageError, InputError, UnsupportedSystemError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", help="bool | nat | int | qplus | minplus | power:FILE | rooted:FILE | lagrassa:FILE")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--cap", type=int, default=None, help=f"lower size cap (env {CAP_ENV})")

    parser = _Parser(prog="mdioid", description="Linear algebra over m-dioids and set-family checks.")
    parser.add_argument("--version", action="version", version=f"mdioid {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    sub.add_parser("verify-axioms", parents=[common], help="exhaustive axiom report for a finite system")
    p = sub.add_parser("bidet", parents=[common], help="bideterminant of a matrix file")
    p.add_argument("input")
    p = sub.add_parser("bidet-properties", parents=[common], help="check bideterminant identities")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--samples", type=int, default=1000)
    p = sub.add_parser("attach", parents=[common], help="search for a linear attachment")
    p.add_argument("input")
    p.add_argument("--method", choices=("brute", "mcos", "real"), default="brute")
    p = sub.add_parser("lift", parents=[common], help="lift a Boolean attachment to the naturals")
    p.add_argument("input")
    p.add_argument("--a", default=None, help="1-based indices of side A, comma-separated")
    p.add_argument("--b", default=None, help="1-based indices of side B, comma-separated")
    p = sub.add_parser("decide-equal", parents=[common], help="fast test of det+ == det-")
    p.add_argument("input")
    family_help = {
        "check-distinct": "do all subfamilies have different unions",
        "check-disparate": "do disjoint subfamilies have different unions",
        "certify-maximal": "bideterminant check of an n-set family",
    }
    for name, text in family_help.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input")
        p.add_argument("--allow-duplicates", action="store_true")
        if name == "check-disparate":
            p.add_argument("--method", choices=("brute", "bidet", "fast"), default="brute")
    p = sub.add_parser("enumerate-maximal", parents=[common], help="all n-set families with disparate unions")
    p.add_argument("--n", type=int, required=True)
    return parser


def config_from_args(argv: Optional[Sequence[str]] = None, environ=None) -> RunConfig:
    environ = os.environ if environ is None else environ
    ns = build_parser().parse_args(argv)
    cap = ns.cap
    if cap is None and environ.get(CAP_ENV):
        try:
            cap = int(environ[CAP_ENV])
        except ValueError:
            raise UsageError(f"{CAP_ENV} must be an integer") from None
    return RunConfig(
        subcommand=ns.subcommand,
        system=ns.system,
        input=getattr(ns, "input", None),
        method=getattr(ns, "method", None),
        format=ns.format,
        seed=ns.seed,
        cap=cap,
        n=getattr(ns, "n", None),
        samples=getattr(ns, "samples", 1000),
        a=getattr(ns, "a", None),
        b=getattr(ns, "b", None),
        allow_duplicates=getattr(ns, "allow_duplicates", False),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = config_from_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
