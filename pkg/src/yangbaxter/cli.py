"""Command-line front end.

Solution files are JSON objects ``{"n": 3, "sigma": [[...]], "gamma": [[...]]}``
with optional ``name`` and ``notes``. Rows are actor-first:
``sigma[x][y] = sigma_x(y)`` and ``gamma[y][x] = gamma_y(x)``, so
``r(x, y) = (sigma[x][y], gamma[y][x])``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Optional, Sequence

from . import atlas, fixtures
from .actions import bijectivity_report
from .atlas import CampaignRangeError, cocycle_class
from .cancellative import (
    EtaWindow,
    QuotientMonoid,
    WindowError,
    congruence_checks,
    injective_solution,
    is_left_cancellative_within,
    r_bar,
)
from .solution import (
    FiniteSolution,
    SolutionError,
    fixed_pair_multiplicities,
    fixed_pairs,
    h_inverse_candidate,
    h_map,
    left_nondegenerate,
    properties,
    right_nondegenerate,
    rump_conditions,
    validate,
)
from .words import DegreeError, Kind, ResourceGuardError, quotient, relations

SCHEMA = "yangbaxter.report/1"
EXIT_OK, EXIT_VIOLATIONS, EXIT_ERROR = 0, 1, 2
DEFAULT_DEGREE = 4


class InputError(ValueError):
    pass


@dataclass
class Report:
    command: str
    parameters: dict
    result: dict
    timing: Optional[float] = None
    schema: str = SCHEMA
    violations: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Report:
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)


def _plain(obj: Any) -> Any:
    """Convert tuples and numpy scalars into JSON-native values."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return obj.item()
    return obj


# --- solution input ----------------------------------------------------------

def solution_to_dict(s: FiniteSolution) -> dict:
    sig, gam = s.tables()
    out = {"n": s.n, "sigma": sig, "gamma": gam}
    if s.name:
        out["name"] = s.name
    return out


def load_solution_file(path: str) -> FiniteSolution:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from None
    return solution_from_dict(data, source=path)


def solution_from_dict(data: Any, source: str = "input") -> FiniteSolution:
    if not isinstance(data, dict):
        raise InputError(f"{source}: expected a JSON object with n, sigma, gamma")
    for key in ("n", "sigma", "gamma"):
        if key not in data:
            raise InputError(f"{source}: missing field '{key}'")
    for key in ("sigma", "gamma"):
        table = data[key]
        if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
            raise InputError(f"{source}: field '{key}' must be a list of rows")
    try:
        return validate(data["n"], data["sigma"], data["gamma"], name=data.get("name"))
    except SolutionError as exc:
        raise InputError(f"{source}: {exc}") from None


def _resolve(args) -> FiniteSolution:
    if args.example and args.path:
        raise InputError("give either a solution file or --example, not both")
    if args.example:
        try:
            return fixtures.example(args.example)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    if args.path:
        return load_solution_file(args.path)
    raise InputError("no input: pass a solution file or --example NAME")


def _source(args) -> dict:
    return {"example": args.example} if args.example else {"path": args.path}


# --- commands -------------------------------------------------------------------

def cmd_check(args) -> Report:
    s = _resolve(args)
    props = properties(s)
    result: dict = {"solution": solution_to_dict(s), "properties": props.as_dict()}
    if right_nondegenerate(s):
        r1, r2, r3 = rump_conditions(s)
        result["rump"] = {"r1": r1, "r2": r2, "r3": r3, "agrees_with_braid": (r1 and r2 and r3) == props.is_ybe}
    else:
        result["rump"] = None
    if left_nondegenerate(s) and right_nondegenerate(s):
        h, g = h_map(s), h_inverse_candidate(s)
        result["h_map"] = {"h": list(h.image), "bijective": h.is_bijective(),
                           "inverse_is_gamma_fixed": h.is_bijective() and h.inverse() == g}
    else:
        result["h_map"] = None
    first, second = fixed_pair_multiplicities(s)
    result["fixed_pairs"] = {"pairs": fixed_pairs(s), "first_multiplicity": first,
                             "second_multiplicity": second,
                             "unique": all(v == 1 for v in first + second)}
    return Report("check", _source(args), result)


def cmd_monoid(args) -> Report:
    s = _resolve(args)
    kind = Kind.parse(args.kind)
    D = args.max_degree
    q = quotient(kind, s, D)
    result: dict = {"kind": kind.value, "relations": relations(kind, s), "growth": q.growth()}
    if args.classes:
        result["classes"] = {str(d): q.classes(d) for d in range(D + 1)}
    return Report("monoid", {**_source(args), "kind": kind.value, "max_degree": D}, result)


def cmd_cocycle(args) -> Report:
    s = _resolve(args)
    br = bijectivity_report(s, args.max_degree)
    result = br.as_dict()
    result["summary"] = {"pi": cocycle_class(br, False), "pi_prime": cocycle_class(br, True)}
    return Report("cocycle", {**_source(args), "max_degree": args.max_degree}, result)


def cmd_eta(args) -> Report:
    s = _resolve(args)
    if not left_nondegenerate(s):
        raise InputError("eta needs a left non-degenerate solution; this one is not left non-degenerate")
    ew = EtaWindow(s, args.max_degree, args.witness_bound)
    qm = QuotientMonoid(ew)
    merges = [{"degree": m.degree, "left": m.left, "right": m.right, "rule": m.rule, "witness": m.witness}
              for m in ew.merges]
    r_values, agrees = [], True
    if ew.max_degree >= 2 and is_left_cancellative_within(qm):
        for x in range(s.n):
            for y in range(s.n):
                try:
                    u, v = r_bar(qm, (x,), (y,))
                except WindowError:
                    agrees = False
                    continue
                r_values.append([x, y, u, v])
                agrees = agrees and (u, v) == tuple((w,) for w in s.r(x, y))
    cong = congruence_checks(ew)
    result = {
        "A_growth": ew.qA.growth(),
        "eta_growth": ew.growth(),
        "witness_bound": ew.witness_bound,
        "sweeps": ew.sweeps,
        "stable_within_window": ew.stable_within_window,
        "merges": merges,
        "left_cancellative_within_window": is_left_cancellative_within(qm),
        "injective_on_generators": injective_solution(s, ew),
        "congruence_ok": cong.ok,
        "r_bar_on_letters": r_values,
        "r_bar_equals_r": agrees and bool(r_values),
    }
    params = {**_source(args), "max_degree": ew.max_degree, "witness_bound": ew.witness_bound}
    return Report("eta", params, result)


def cmd_enumerate(args) -> Report:
    name = args.campaign
    if name == "rump":
        rep = atlas.campaign_rump(args.n, jobs=args.jobs)
    elif name == "cocycle":
        rep = atlas.campaign_cocycle(args.n, args.max_degree, samples=args.samples, seed=args.seed)
    elif name == "free_abelian":
        rep = atlas.campaign_free_abelian(args.n, args.max_degree)
    else:
        rep = atlas.campaign_main_irr(args.n, pruned=args.pruned)
    data = rep.as_dict()
    elapsed = data.pop("elapsed")
    report = Report("enumerate", {"campaign": name, **data.pop("parameters")},
                    {"counts": data["counts"]}, violations=data["violations"])
    report.timing = elapsed
    return report


def cmd_example(args) -> Report:
    if args.name is None:
        listing = [{"name": k, "n": s.n} for k, s in fixtures.builtin_examples().items()]
        return Report("example", {}, {"examples": listing})
    try:
        s = fixtures.example(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    return Report("example", {"name": args.name}, {"solution": solution_to_dict(s)})


COMMANDS = {
    "check": cmd_check,
    "monoid": cmd_monoid,
    "cocycle": cmd_cocycle,
    "eta": cmd_eta,
    "enumerate": cmd_enumerate,
    "example": cmd_example,
}


# --- parsing and output ---------------------------------------------------------

def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--max-degree", type=int, default=default(None), metavar="D",
                        help=f"truncation degree (default {DEFAULT_DEGREE})")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for randomized checks")
    parser.add_argument("--jobs", type=int, default=default(None), help="worker processes (default: CPU count)")
    parser.add_argument("--format", choices=("human", "json"), default=default("human"))
    parser.add_argument("--timing", action="store_true", default=default(False),
                        help="include wall-clock timing (makes output non-deterministic)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yangbaxter", description="Finite set-theoretic Yang-Baxter solutions.")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("path", nargs="?", help="solution JSON file")
    source.add_argument("--example", metavar="NAME", help="built-in example instead of a file")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common, source], help="YBE verdict and structural properties")
    p = sub.add_parser("monoid", parents=[common, source], help="relations and growth of M, A or A'")
    p.add_argument("--kind", default="M", choices=("M", "A", "Ap"))
    p.add_argument("--classes", action="store_true", help="list classes for every degree")
    sub.add_parser("cocycle", parents=[common, source], help="injectivity/surjectivity of pi and pi'")
    p = sub.add_parser("eta", parents=[common, source], help="left cancellative quotient inside a window")
    p.add_argument("--witness-bound", type=int, default=None, metavar="W")
    p = sub.add_parser("enumerate", parents=[common], help="run a verification campaign")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--campaign", default="main_irr", choices=sorted(atlas.CAMPAIGNS))
    p.add_argument("--pruned", action="store_true", help="pruned non-degenerate enumeration (n = 4)")
    p.add_argument("--samples", type=int, default=10_000, help="random map pairs for the n = 3 cocycle campaign")
    p = sub.add_parser("example", parents=[common], help="list built-in examples or print one")
    p.add_argument("name", nargs="?")
    return parser


def _human(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict) and len(_inline(v)) > 100:
                lines.append(f"{pad}-")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(pad + _inline(value))
    return lines


def _flat(v: Any) -> bool:
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, dict) for x in v) and len(json.dumps(v)) <= 100


def _inline(v: Any) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    lines = [f"{report.command}  {_inline(report.parameters)}"]
    lines.extend(_human(report.result, 1))
    if report.command == "enumerate":
        lines.append(f"  violations: {len(report.violations)}")
        lines.extend(_human(report.violations, 2))
    if report.timing is not None:
        lines.append(f"  elapsed: {report.timing:.3f}s")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_degree is None:
        args.max_degree = DEFAULT_DEGREE
    if args.jobs is None:
        args.jobs = os.cpu_count() or 1
    t0 = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except (InputError, SolutionError, CampaignRangeError, ResourceGuardError, DegreeError, WindowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.result = _plain(report.result)
    report.parameters = _plain(report.parameters)
    report.violations = _plain(report.violations)
    if args.timing:
        report.timing = report.timing if report.timing is not None else time.perf_counter() - t0
    else:
        report.timing = None
    print(render(report, args.format))
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
