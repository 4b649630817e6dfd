"""Command-line front end.

    fourfold catalog
    fourfold derive --pair fano --format json
    fourfold eval --pair fano --x 0,1
    fourfold count --pair sextic --max-invariant 0
    fourfold count --pair dv --chi 1 --k2 9 --representable
    fourfold count --pair cicy133 --chi 8 --k2 0 --domain n3 --method hyperbola
    fourfold bound --pair fano --s 0
    fourfold representable --pair cicy41 --lo 2 --hi 6

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import __version__
from .catalog import CATALOG_NAMES, METHOD_HINTS, catalog_names, get_pair, parse_pair_spec
from .chow import PRODUCT
from .errors import FourfoldError, Undecidable
from .lattice import (
    Domain,
    Empty,
    Finite,
    Method,
    closed_form_bound,
    enumerate_sublevel,
    level_set,
    representable,
    restricted_count_n3,
    sublevel_range,
)
from .pairs import (
    PairSpec,
    QForm,
    derive_qform,
    is_decent,
    lawrence_discriminant,
    q_eval,
    q_minimum,
)
from .surfaces import EXACT_VALUE, ChiAndK2, ChiAtMost, chi_noether, invariant_from_chern, invariant_threshold

INT64 = 2 ** 63


class UsageError(Exception):
    pass


# -- reports -----------------------------------------------------------------------


def _encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if -INT64 <= value < INT64 else str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    raise TypeError(f"cannot encode {value!r}")


def _decode(value: Any) -> Any:
    if isinstance(value, str):
        body = value[1:] if value.startswith("-") else value
        if body.isdigit():
            n = int(value)
            if not -INT64 <= n < INT64:
                return n
        return value
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


@dataclass
class Report:
    pair: str
    ambient: str
    basis: list[str]
    gram: list[list[int]]
    linear: list[int]
    decent: bool
    decency: dict
    minimum: dict | None = None
    results: dict = field(default_factory=dict)
    version: str = __version__

    def to_json(self) -> dict:
        return _encode(asdict(self))

    @classmethod
    def from_json(cls, doc: dict) -> Report:
        doc = _decode(doc)
        return cls(
            pair=doc["pair"],
            ambient=doc["ambient"],
            basis=list(doc["basis"]),
            gram=[[int(v) for v in row] for row in doc["gram"]],
            linear=[int(v) for v in doc["linear"]],
            decent=bool(doc["decent"]),
            decency=doc["decency"],
            minimum=doc.get("minimum"),
            results=doc.get("results", {}),
            version=doc.get("version", ""),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def text(self) -> str:
        lines = [
            f"pair:     {self.pair}",
            f"ambient:  {self.ambient}",
            f"basis:    {', '.join(self.basis)}",
            f"gram:     {self.gram}",
            f"linear:   {self.linear}",
            f"decent:   {'yes' if self.decent else 'no'}",
        ]
        if self.minimum is not None:
            vertex = ", ".join(str(v) for v in self.minimum["vertex"])
            lines.append(f"minimum:  {self.minimum['value']} at ({vertex})")
        for key in sorted(self.results):
            lines.append(f"{key}: {_text_value(self.results[key])}")
        return "\n".join(lines)


def _text_value(v: Any) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_text_value(x)}" for k, x in sorted(v.items())) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def base_report(pair: PairSpec, q: QForm) -> Report:
    dec = is_decent(q)
    minimum = None
    if dec.decent:
        vertex, value = q_minimum(q)
        minimum = {"vertex": [str(v) for v in vertex], "value": str(value)}
    return Report(
        pair=pair.name,
        ambient=str(pair.ambient),
        basis=list(q.labels),
        gram=[list(row) for row in q.gram],
        linear=list(q.linear),
        decent=dec.decent,
        decency=dec.witness(),
        minimum=minimum,
    )


def count_to_json(r) -> dict:
    if isinstance(r, Empty):
        return {"kind": "empty", "count": 0, "points": []}
    if isinstance(r, Finite):
        out = {"kind": "finite", "count": r.count, "points": [list(p) for p in r.points]}
        if r.certificate:
            out["certificate"] = dict(r.certificate)
        return out
    return {
        "kind": "infinite",
        "families": [{"base": list(f.base), "direction": list(f.direction), "text": str(f)} for f in r.families],
        "isolated": [list(p) for p in r.isolated],
    }


# -- argument parsing --------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def _print_message(self, message, file=None):
        # all output goes through run()'s return value
        pass

    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        # --help lands here
        raise UsageError(message or self.format_help()) if status else _HelpExit(self.format_help())


class _HelpExit(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fourfold", description="Associated quadratic functions of Calabi-Yau fourfold embeddings.")
    parser.add_argument("--version", action="store_true", help="print the version")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def with_pair(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--pair", help="catalog name (" + ", ".join(CATALOG_NAMES) + ")")
        src.add_argument("--pair-file", help="path to a pair-spec JSON document")
        p.add_argument("--degrees", type=_int_list, help="degrees for the parametric 'ci' entry, e.g. 3,4")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("catalog", help="list catalog pairs")
    p.add_argument("--format", choices=("text", "json"), default="text")

    with_pair(sub.add_parser("derive", help="derive Q, decency, minimum"))

    p = sub.add_parser("eval", help="evaluate Q at a point")
    with_pair(p)
    p.add_argument("--x", required=True, type=_int_list, help="coordinates, e.g. 0,1 (use --x=-1,2 for a leading minus)")

    p = sub.add_parser("count", help="count classes under a surface constraint")
    with_pair(p)
    thr = p.add_mutually_exclusive_group()
    thr.add_argument("--max-invariant", type=int, help="Q <= s")
    thr.add_argument("--max-chi", type=int, help="chi(O_S) <= r, i.e. Q <= 6r")
    thr.add_argument("--chi", type=int, help="chi(O_S) = r (with --k2)")
    p.add_argument("--k2", type=int, help="K_S^2 = q (with --chi), i.e. Q = -12r + 2q")
    p.add_argument("--min-invariant", type=int, help="optional lower bound on Q for upper-bound counts")
    p.add_argument("--representable", action="store_true", help="only decide whether some class qualifies")
    p.add_argument("--domain", choices=("z", "n3"), help="all integer vectors (z) or nonnegative ones (n3)")
    p.add_argument("--method", choices=[m.value for m in Method], help="restricted count method for non-decent pairs")
    p.add_argument("--list-points", action="store_true", help="include the point list in text output")

    p = sub.add_parser("bound", help="closed-form (non-certified) count bound")
    with_pair(p)
    p.add_argument("--s", required=True, type=int)

    p = sub.add_parser("representable", help="does Q take a value in [lo, hi]?")
    with_pair(p)
    p.add_argument("--lo", required=True, type=int)
    p.add_argument("--hi", required=True, type=int)
    p.add_argument("--domain", choices=("z", "n3"))
    return parser


def _load_pair(args) -> PairSpec:
    if args.pair_file:
        try:
            data = Path(args.pair_file).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.pair_file}: {exc}") from None
        return parse_pair_spec(data)
    if args.pair == "ci" and not args.degrees:
        raise UsageError("the 'ci' entry needs --degrees, e.g. --degrees 3,4")
    try:
        return get_pair(args.pair, args.degrees)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _default_domain(pair: PairSpec) -> Domain:
    return Domain.NONNEGATIVES if pair.ambient.kind == PRODUCT else Domain.ALL_INTEGERS


# -- subcommands -------------------------------------------------------------------


def _cmd_catalog(args) -> tuple[dict, str]:
    entries = []
    for name in catalog_names():
        if name == "ci":
            entries.append({"name": "ci", "ambient": "P^(4+k)", "description": "complete intersection; give --degrees summing to 5+k"})
            continue
        pair = get_pair(name)
        entry = {"name": name, "ambient": str(pair.ambient), "description": pair.description}
        if name in METHOD_HINTS:
            entry["method"] = METHOD_HINTS[name]
        entries.append(entry)
    doc = {"catalog": entries, "version": __version__}
    text = "\n".join(f"{e['name']:<8} {e['ambient']:<12} {e['description']}" for e in entries)
    return doc, text


def _derive(args, pair: PairSpec) -> Report:
    q = derive_qform(pair)
    report = base_report(pair, q)
    report.results["q"] = str(q)
    if report.decent and q.m == 2:
        scale, shift = lawrence_discriminant(q)
        report.results["lawrence"] = {"scale": scale, "shift": str(shift)}
    if pair.fixtures:
        checks = []
        for fx in pair.fixtures:
            entry = {
                "name": fx.name,
                "alpha": list(fx.alpha),
                "q": q_eval(q, fx.alpha),
                "c1sq_minus_c2": invariant_from_chern(fx.c1sq, fx.c2),
                "chi": chi_noether(fx.c1sq, fx.c2),
            }
            if fx.hodge:
                entry["hodge_chi"] = fx.hodge[0] - fx.hodge[1] + fx.hodge[2]
            checks.append(entry)
        report.results["fixtures"] = checks
    return report


def _threshold(args) -> tuple[str, int]:
    if args.chi is not None or args.k2 is not None:
        if args.chi is None or args.k2 is None:
            raise UsageError("--chi and --k2 go together")
        return invariant_threshold(ChiAndK2(args.chi, args.k2))
    if args.max_chi is not None:
        return invariant_threshold(ChiAtMost(args.max_chi))
    if args.max_invariant is not None:
        return "upper_bound", args.max_invariant
    raise UsageError("count needs one of --max-invariant, --max-chi, or --chi with --k2")


def _count(args, pair: PairSpec) -> Report:
    kind, value = _threshold(args)
    if kind == EXACT_VALUE and args.min_invariant is not None:
        raise UsageError("--min-invariant only applies to upper-bound constraints")
    q = derive_qform(pair)
    report = base_report(pair, q)
    exact = kind == EXACT_VALUE
    lo = value if exact else args.min_invariant
    report.results["constraint"] = {"kind": kind, "value": value, "lower": lo}

    if report.decent:
        domain = Domain(args.domain) if args.domain else Domain.ALL_INTEGERS
        if args.method:
            raise UsageError("--method applies only to non-decent pairs")
        if args.representable:
            low = lo if lo is not None else math.floor(q_minimum(q)[1])
            rep = representable(q, low, value, domain)
            report.results["representable"] = _rep_json(rep)
            return report
        if exact:
            r = level_set(q, value, domain)
        elif lo is not None:
            r = sublevel_range(q, lo, value, domain)
        else:
            r = enumerate_sublevel(q, value, domain)
        report.results["domain"] = domain.value
        report.results["count"] = count_to_json(r)
        return report

    if args.domain != "n3" or not args.method:
        raise UsageError("non-decent pairs need --domain n3 and --method (bounded-box | hyperbola)")
    if args.representable:
        if lo is None:
            raise Undecidable("an upper bound alone does not confine a non-decent form; add --min-invariant")
        rep = representable(q, lo, value, Domain.NONNEGATIVES)
        report.results["representable"] = _rep_json(rep)
        return report
    if lo is None:
        raise Undecidable("an upper bound alone does not confine a non-decent form; add --min-invariant")
    per_value = {}
    points: list[list[int]] = []
    families: list[dict] = []
    for p in range(lo, value + 1):
        r = count_to_json(restricted_count_n3(q, p, args.method))
        if r["kind"] == "infinite":
            families += r["families"]
            points += r["isolated"]
            per_value[str(p)] = "infinite"
        else:
            points += r["points"]
            if r["count"]:
                per_value[str(p)] = r["count"]
    points.sort()
    if families:
        total = {"kind": "infinite", "families": families, "isolated": points}
    else:
        total = {"kind": "finite", "count": len(points), "points": points}
    report.results["domain"] = "n3"
    report.results["method"] = args.method
    report.results["count"] = total
    report.results["per_value"] = per_value
    return report


def _rep_json(rep) -> dict:
    out: dict = {"representable": rep.representable}
    if rep.witness is not None:
        out["witness"] = list(rep.witness)
    if rep.certificate is not None:
        out["certificate"] = dict(rep.certificate)
    return out


def _bound(args, pair: PairSpec) -> Report:
    q = derive_qform(pair)
    report = base_report(pair, q)
    bound = closed_form_bound(q, args.s)
    report.results["s"] = args.s
    report.results["closed_form_bound"] = bound
    report.results["certified"] = False
    r = enumerate_sublevel(q, args.s)
    report.results["exact_count"] = 0 if isinstance(r, Empty) else r.count
    return report


def _representable(args, pair: PairSpec) -> Report:
    q = derive_qform(pair)
    report = base_report(pair, q)
    domain = Domain(args.domain) if args.domain else _default_domain(pair)
    report.results["range"] = [args.lo, args.hi]
    report.results["domain"] = domain.value
    report.results["representable"] = _rep_json(representable(q, args.lo, args.hi, domain))
    return report


def _eval(args, pair: PairSpec) -> Report:
    q = derive_qform(pair)
    report = base_report(pair, q)
    report.results["x"] = list(args.x)
    report.results["value"] = q_eval(q, args.x)
    return report


COMMANDS = {"derive": _derive, "eval": _eval, "count": _count, "bound": _bound, "representable": _representable}


def _summary(report: Report, args) -> str:
    text = report.text()
    count = report.results.get("count")
    if isinstance(count, dict) and count.get("kind") == "finite" and not getattr(args, "list_points", False):
        # keep text output short; JSON always carries the points
        shown = dict(report.results)
        shown["count"] = {k: v for k, v in count.items() if k != "points"}
        text = Report(**{**asdict(report), "results": shown}).text()
    return text


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one invocation; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.version:
            return 0, __version__
        if args.command is None:
            raise UsageError(parser.format_usage().rstrip())
        if args.command == "catalog":
            doc, text = _cmd_catalog(args)
            return 0, (json.dumps(doc, indent=2, sort_keys=True) if args.format == "json" else text)
        pair = _load_pair(args)
        report = COMMANDS[args.command](args, pair)
    except _HelpExit as exc:
        return 0, str(exc.args[0])
    except UsageError as exc:
        return 2, str(exc)
    except FourfoldError as exc:
        return 1, f"error: {exc.kind}: {exc}"
    except KeyError as exc:
        return 2, f"error: {exc.args[0]}"
    if args.format == "json":
        return 0, report.dumps()
    return 0, _summary(report, args)


def main(argv: list[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == 0 else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
