"""Command-line entry point.

    totaro <command> --input <path> [--json] [--search-bound N] [--poly-bound N] [--output PATH]

Commands: symbol, class, index, transfer, totaro. Input and report documents
are JSON; rationals are integers or {"num": n, "den": d}, and floats are
rejected. Exit codes: 0 success, 2 invalid input, 3 search exhausted,
4 theta undetermined (the full report is still written).
"""
from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal
from fractions import Fraction
from typing import Any

from . import __version__
from .brauer import (
    BrauerClassK,
    BrauerClassQ,
    admits_unitary_involution,
    corestrict,
    find_quaternion_symbol,
    mod1,
    quaternion_class,
    schur_index,
)
from .engine import DEFAULT_POLY_BOUND, DEFAULT_SEARCH_BOUND, Check, TorsorSpec, run_totaro
from .errors import SearchExhausted, TotaroError
from .places import QuadraticField, hilbert_symbol, place, rational_record, relevant_places
from .quat import QuaternionAlgebra
from .witt import (
    HermitianForm,
    QuadraticForm,
    SimpleExtension,
    invariants,
    is_isotropic,
    projection_formula_check,
    transfer,
    transfer_stepwise,
    witt_equivalent,
)

COMMANDS = ("symbol", "class", "index", "transfer", "totaro")

EXIT_OK, EXIT_INVALID, EXIT_EXHAUSTED, EXIT_UNDETERMINED = 0, 2, 3, 4


class InputError(TotaroError):
    """Malformed input document; the message starts with the JSON path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# ---------------------------------------------------------------------------
# parsing


def _reject_floats(node, path="$"):
    if isinstance(node, Decimal):
        raise InputError(path, "floating point numbers are not accepted; use {\"num\": n, \"den\": d}")
    if isinstance(node, dict):
        for k, v in node.items():
            _reject_floats(v, f"{path}.{k}")
    elif isinstance(node, list):
        for i, v in enumerate(node):
            _reject_floats(v, f"{path}[{i}]")


def _bad_constant(name):
    raise ValueError(f"{name} is not allowed")


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text, parse_float=Decimal, parse_constant=_bad_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    except ValueError as exc:
        raise InputError("$", str(exc)) from None
    _reject_floats(doc)
    if not isinstance(doc, dict):
        raise InputError("$", "top level must be an object")
    return doc


def _get(obj: dict, key: str, path: str, default: Any = ...):
    if not isinstance(obj, dict):
        raise InputError(path, "expected an object")
    if key not in obj:
        if default is ...:
            raise InputError(f"{path}.{key}", "missing")
        return default
    return obj[key]


def parse_int(node, path: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise InputError(path, f"expected an integer, got {json.dumps(node)}")
    return node


def parse_rational(node, path: str) -> Fraction:
    if isinstance(node, dict):
        num = parse_int(_get(node, "num", path), f"{path}.num")
        den = parse_int(_get(node, "den", path), f"{path}.den")
        if den == 0:
            raise InputError(f"{path}.den", "denominator is zero")
        return Fraction(num, den)
    if isinstance(node, bool) or not isinstance(node, int):
        raise InputError(path, "expected an integer or {\"num\": n, \"den\": d}")
    return Fraction(node)


def parse_nonzero(node, path: str) -> Fraction:
    x = parse_rational(node, path)
    if x == 0:
        raise InputError(path, "must be nonzero")
    return x


def parse_list(node, path: str) -> list:
    if not isinstance(node, list):
        raise InputError(path, "expected a list")
    return node


def _wrap(path: str, fn, *args):
    """Turn library validation errors into path-bearing input errors."""
    try:
        return fn(*args)
    except InputError:
        raise
    except SearchExhausted:
        raise
    except (TotaroError, ValueError, TypeError) as exc:
        raise InputError(path, str(exc)) from None


def parse_field(node, path: str) -> QuadraticField:
    d = parse_int(_get(node, "d", path), f"{path}.d")
    return _wrap(f"{path}.d", QuadraticField, d)


def parse_quaternion(node, path: str) -> QuaternionAlgebra:
    a = parse_nonzero(_get(node, "a", path), f"{path}.a")
    b = parse_nonzero(_get(node, "b", path), f"{path}.b")
    return QuaternionAlgebra(a, b)


def parse_class(node, path: str):
    """A Brauer class; over K when the object carries ``d``."""
    entries = parse_list(_get(node, "invariants", path), f"{path}.invariants")
    K = parse_field(node, path) if isinstance(node, dict) and "d" in node else None
    inv = []
    for i, rec in enumerate(entries):
        p = f"{path}.invariants[{i}]"
        raw = _get(rec, "place", p)
        if raw != "inf":
            raw = parse_int(raw, f"{p}.place")
        v = _wrap(f"{p}.place", place, raw)
        x = parse_rational(rec, p)
        if K is None:
            if "slot" in rec:
                raise InputError(f"{p}.slot", "slots only apply to classes over K")
            inv.append((v, x))
        else:
            slot = rec.get("slot")
            if slot is not None:
                slot = parse_int(slot, f"{p}.slot")
            w = _wrap(p, lambda: BrauerClassK(K).place(v, slot))
            inv.append((w, x))
    if K is None:
        return _wrap(path, BrauerClassQ, inv)
    return _wrap(path, BrauerClassK, K, inv)


def parse_hermitian(node, path: str, K: QuadraticField | None = None) -> HermitianForm:
    entries = parse_list(_get(node, "entries", path), f"{path}.entries")
    vals = tuple(parse_nonzero(e, f"{path}.entries[{i}]") for i, e in enumerate(entries))
    field = parse_field(node, path) if "d" in node else K
    if field is None:
        raise InputError(f"{path}.d", "missing")
    return HermitianForm(field, vals)


def parse_poly(node, path: str) -> list[int]:
    coeffs = parse_list(node, path)
    return [parse_int(c, f"{path}[{i}]") for i, c in enumerate(coeffs)]


def parse_element(node, path: str) -> list[Fraction]:
    if isinstance(node, list):
        return [parse_rational(c, f"{path}[{i}]") for i, c in enumerate(node)]
    return [parse_rational(node, path)]


# ---------------------------------------------------------------------------
# commands


def _checks(*pairs) -> list[dict]:
    return [Check(name, bool(ok), inputs).as_dict() for name, ok, inputs in pairs]


def cmd_symbol(spec, config):
    a = parse_nonzero(_get(spec, "a", "$.spec"), "$.spec.a")
    b = parse_nonzero(_get(spec, "b", "$.spec"), "$.spec.b")
    raw = _get(spec, "place", "$.spec", None)
    if raw is None:
        raw = _get(spec, "v", "$.spec")
    if raw != "inf":
        raw = parse_int(raw, "$.spec.place")
    v = _wrap("$.spec.place", place, raw)
    value = hilbert_symbol(a, b, v)
    support = relevant_places(a, b)
    product = 1
    for w in support:
        product *= hilbert_symbol(a, b, w)
    result = {"a": rational_record(a), "b": rational_record(b), "place": str(v), "value": value}
    checks = _checks(
        ("symmetric", hilbert_symbol(b, a, v) == value, {}),
        ("reciprocity", product == 1, {"support": [str(w) for w in support]}),
    )
    return result, checks, EXIT_OK


def cmd_class(spec, config):
    if "entries" in spec:
        entries = parse_list(spec["entries"], "$.spec.entries")
        q = QuadraticForm(tuple(parse_nonzero(e, f"$.spec.entries[{i}]") for i, e in enumerate(entries)))
        inv = invariants(q)
        result = {"form": [rational_record(a) for a in q.entries], "invariants": inv.as_dict(), "isotropic": is_isotropic(q)}
        checks = _checks(
            ("hasse_minus_even", len(inv.hasse_minus) % 2 == 0 or q.dim < 2, {}),
            ("signature_parity", (inv.signature - inv.dim) % 2 == 0, {}),
        )
        return result, checks, EXIT_OK
    if "invariants" in spec:
        cls = parse_class(spec, "$.spec")
        result = {"class": cls.records(), "schur_index": schur_index(cls)}
        total = sum((x for _, x in cls.items()), Fraction(0))
        return result, _checks(("invariants_sum_to_zero", mod1(total) == 0, {})), EXIT_OK
    alg = parse_quaternion(spec, "$.spec")
    cls = quaternion_class(alg.a, alg.b)
    a, b = find_quaternion_symbol(cls, config["search_bound"])
    result = {
        "a": rational_record(alg.a),
        "b": rational_record(alg.b),
        "class": cls.records(),
        "schur_index": schur_index(cls),
        "minimal_symbol": [a, b],
    }
    checks = _checks(
        ("invariants_sum_to_zero", mod1(sum((x for _, x in cls.items()), Fraction(0))) == 0, {}),
        ("minimal_symbol_round_trip", quaternion_class(a, b) == cls, {"a": a, "b": b}),
    )
    return result, checks, EXIT_OK


def cmd_index(spec, config):
    node = spec.get("class", spec) if isinstance(spec, dict) else spec
    cls = parse_class(node, "$.spec" if node is spec else "$.spec.class")
    result = {"class": cls.records(), "schur_index": schur_index(cls)}
    checks = [("index_one_iff_zero", (schur_index(cls) == 1) == cls.is_zero(), {})]
    if isinstance(cls, BrauerClassK):
        cores = corestrict(cls)
        result["d"] = cls.K.d
        result["corestriction"] = cores.records()
        result["admits_unitary_involution"] = admits_unitary_involution(cls)
    return result, _checks(*checks), EXIT_OK


def cmd_transfer(spec, config):
    poly = parse_poly(_get(spec, "poly", "$.spec"), "$.spec.poly")
    tower = [parse_poly(g, f"$.spec.tower[{i}]") for i, g in enumerate(parse_list(spec.get("tower", []), "$.spec.tower"))]
    ext = _wrap("$.spec.poly", SimpleExtension, poly, tower)
    form_nodes = parse_list(spec.get("form", [1]), "$.spec.form")
    form = [parse_element(e, f"$.spec.form[{i}]") for i, e in enumerate(form_nodes)]
    for i, mu in enumerate(form):
        if len(mu) > ext.f.degree:
            raise InputError(f"$.spec.form[{i}]", f"at most {ext.f.degree} coefficients")
    q_nodes = parse_list(spec.get("q", [1]), "$.spec.q")
    q = QuadraticForm(tuple(parse_nonzero(e, f"$.spec.q[{i}]") for i, e in enumerate(q_nodes)))
    lam = parse_element(spec.get("lambda", [0, 1]), "$.spec.lambda")
    scalar = ext.element(lam)
    if scalar.is_zero():
        raise InputError("$.spec.lambda", "must be nonzero")
    entries = [ext.element(mu) for mu in form]
    tq = _wrap("$.spec.form", transfer, ext, entries)
    stepwise = transfer_stepwise(ext, entries)
    first, second = projection_formula_check(ext, q, scalar)
    result = {
        "degree": ext.degree,
        "transfer": [rational_record(a) for a in tq.entries],
        "transfer_invariants": invariants(tq).as_dict(),
        "norm_lambda": rational_record(ext.norm(scalar)),
        "projection": {"restriction_then_transfer": first, "scaled_by_lambda": second},
    }
    checks = _checks(
        ("projection_restriction_then_transfer", first, {"q": [rational_record(a) for a in q.entries]}),
        ("projection_scaled_by_lambda", second, {"lambda": [rational_record(c) for c in lam]}),
        ("stepwise_transfer_agrees", witt_equivalent(tq, stepwise), {"levels": len(ext.levels)}),
    )
    return result, checks, EXIT_OK


def parse_torsor(spec) -> TorsorSpec:
    case = _get(spec, "case", "$.spec")
    if case == "split-etale":
        return TorsorSpec(
            case,
            C=parse_class(_get(spec, "C", "$.spec"), "$.spec.C"),
            B=parse_class(_get(spec, "B", "$.spec"), "$.spec.B"),
        )
    if case == "quaternion":
        return TorsorSpec(
            case,
            A0=parse_quaternion(_get(spec, "A0", "$.spec"), "$.spec.A0"),
            B0=parse_quaternion(_get(spec, "B0", "$.spec"), "$.spec.B0"),
            K=parse_field(spec, "$.spec"),
        )
    if case == "odd-degree":
        D = parse_class(_get(spec, "D", "$.spec"), "$.spec.D")
        if not isinstance(D, BrauerClassK):
            raise InputError("$.spec.D.d", "the odd-degree case needs a class over K")
        h = spec.get("h")
        hp = spec.get("h_prime")
        degree = spec.get("degree")
        kwargs = dict(
            D=D,
            degree=None if degree is None else parse_int(degree, "$.spec.degree"),
            h=None if h is None else parse_hermitian(h, "$.spec.h", D.K),
            h_prime=None if hp is None else parse_hermitian(hp, "$.spec.h_prime", D.K),
        )
        return _wrap("$.spec", lambda: TorsorSpec(case, **kwargs))
    raise InputError("$.spec.case", f"unknown case {json.dumps(case)}; expected split-etale, quaternion or odd-degree")


def cmd_totaro(spec, config):
    ts = parse_torsor(spec)
    report = _wrap("$.spec", run_totaro, ts, config["search_bound"], config["poly_bound"])
    result = report.as_dict()
    checks = result.pop("verification")
    return result, checks, EXIT_OK if report.theta_determined else EXIT_UNDETERMINED


HANDLERS = {
    "symbol": cmd_symbol,
    "class": cmd_class,
    "index": cmd_index,
    "transfer": cmd_transfer,
    "totaro": cmd_totaro,
}


def run(command: str, document: dict, config: dict) -> tuple[dict, int]:
    """Execute one command on a parsed document; return (report, exit code)."""
    if command not in HANDLERS:
        raise InputError("$.command", f"unknown command {command!r}")
    declared = document.get("command", command)
    if declared != command:
        raise InputError("$.command", f"document is for {declared!r}, not {command!r}")
    spec = _get(document, "spec", "$")
    if not isinstance(spec, dict):
        raise InputError("$.spec", "expected an object")
    result, checks, code = HANDLERS[command](spec, config)
    report = {
        "input": document,
        "result": result,
        "verification": checks,
        "config": dict(config),
        "version": __version__,
    }
    return report, code


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2, default=_json_default) + "\n"
    lines = [f"totaro {report['version']}"]
    for key, value in report["result"].items():
        lines.append(f"{key}: {json.dumps(value, default=_json_default)}")
    for c in report["verification"]:
        lines.append(f"[{'PASS' if c['pass'] else 'FAIL'}] {c['name']}")
    return "\n".join(lines) + "\n"


def _json_default(obj):
    if isinstance(obj, Decimal):  # pragma: no cover - rejected at parse time
        raise TypeError("float in report")
    if isinstance(obj, Fraction):
        return rational_record(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="totaro", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", required=True, help="path of the JSON input document ('-' for stdin)")
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    parser.add_argument("--search-bound", type=int, default=DEFAULT_SEARCH_BOUND, help="height bound for symbol searches")
    parser.add_argument("--poly-bound", type=int, default=DEFAULT_POLY_BOUND, help="coefficient bound for polynomial searches")
    parser.add_argument("--output", help="write the report here instead of standard output")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = {"search_bound": args.search_bound, "poly_bound": args.poly_bound}
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_INVALID
    try:
        report, code = run(args.command, load_document(text), config)
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (TotaroError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    out = render(report, args.json)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
