"""wbk command line: deterministic reports over structure files and the catalog.

Exit codes: 0 pass/info, 1 mathematical fail (a witness was found),
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import ideals, series, solutions
from .braces import DualWeakBrace, SkewBrace
from .catalog import catalog_list
from .compose import StrongSemilatticeSpec, are_isomorphic, compose, decompose, enumerate_skew_brace_homs
from .errors import (
    NoPeriod,
    NotAnIdeal,
    ParseError,
    UnknownName,
    UsageError,
    ValidationError,
    OrderTooLarge,
)
from .io import load, to_obj
from .solutions import SolutionTable
from .tables import FiniteGroupTable, SemilatticeTable

SUP = str.maketrans("0123456789()", "⁰¹²³⁴⁵⁶⁷⁸⁹⁽⁾")
SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


@dataclass
class Report:
    command: str
    status: str  # pass | fail | info
    lines: list
    witnesses: list


def _emit(report: Report, fmt: str) -> int:
    if fmt == "json":
        obj = {
            "command": report.command,
            "status": report.status,
            "lines": report.lines,
            "witnesses": report.witnesses,
        }
        print(json.dumps(obj, indent=2))
    else:
        for line in report.lines:
            print(line)
        print(f"status: {report.status}")
    return 0 if report.status in ("pass", "info") else 1


def _load_one(args, attr_input="input", attr_catalog="catalog"):
    path = getattr(args, attr_input, None)
    name = getattr(args, attr_catalog, None)
    if (path is None) == (name is None):
        raise UsageError("exactly one of --input/--catalog is required" if attr_input == "input"
                         else "exactly one of --input2/--catalog2 is required")
    return load(path if path is not None else f"catalog:{name}")


def _as_dual(x) -> DualWeakBrace:
    if isinstance(x, DualWeakBrace):
        return x
    if isinstance(x, SkewBrace):
        return x.as_dual()
    if isinstance(x, StrongSemilatticeSpec):
        return compose(x)
    raise UsageError(f"need a brace-like structure, got {type(x).__name__}")


def _as_solution(x) -> SolutionTable:
    if isinstance(x, SolutionTable):
        return x
    return solutions.solution_of(_as_dual(x))


def _members(args, order: int) -> frozenset:
    if args.members is None:
        raise UsageError("this command needs --members a,b,c")
    try:
        got = frozenset(int(tok) for tok in args.members.split(",") if tok.strip() != "")
    except ValueError:
        raise UsageError(f"bad --members value {args.members!r}") from None
    if any(not 0 <= v < order for v in got):
        raise UsageError("--members indices out of range")
    return got


def _set_str(x) -> str:
    return "{" + ", ".join(str(v) for v in sorted(x)) + "}"


def _tier(s: DualWeakBrace, x) -> str:
    if ideals.is_ideal(s, x):
        return "I"
    if ideals.is_strong_left_ideal(s, x):
        return "SL"
    if ideals.is_left_ideal(s, x):
        return "L"
    return "-"


def _series_line(rep: series.SeriesReport) -> str:
    if rep.kind == "right":
        cells = [f"|S{('(%d)' % (m + 1)).translate(SUP)}|={len(x)}" for m, x in enumerate(rep.chain)]
        label = "right"
    elif rep.kind == "socle":
        cells = [f"|Soc{str(m).translate(SUB)}|={len(x)}" for m, x in enumerate(rep.chain)]
        label = "socle"
    elif rep.kind == "annihilator-upper":
        cells = [f"|Ann{str(m).translate(SUB)}|={len(x)}" for m, x in enumerate(rep.chain)]
        label = "annihilator"
    else:
        cells = [f"|Γ{str(m).translate(SUB)}|={len(x)}" for m, x in enumerate(rep.chain)]
        label = "gamma"
    state = f"terminated, index {rep.index}" if rep.terminated else "stalled, no index"
    return f"{label}: " + " → ".join(cells) + f" ({state})"


def _limit(items, args):
    if args.limit is not None and len(items) > args.limit:
        return items[: args.limit], True
    return items, False


def _cmd_catalog(args) -> Report:
    lines = [f"{name}  [{kind}]  {desc}" for name, kind, desc in catalog_list()]
    return Report("catalog", "info", lines, [])


def _cmd_validate(args) -> Report:
    x = _load_one(args)
    kind = {
        FiniteGroupTable: "group",
        SemilatticeTable: "semilattice",
        SkewBrace: "skew_brace",
        DualWeakBrace: "dual_weak_brace",
        StrongSemilatticeSpec: "strong_semilattice",
        SolutionTable: "solution",
    }[type(x)]
    order = getattr(x, "order", getattr(x, "size", None))
    if order is None:
        order = sum(b.order for b in x.braces)
    return Report("validate", "pass", [f"kind: {kind}", f"order: {order}", "valid"], [])


def _cmd_compose(args) -> Report:
    x = _load_one(args)
    if not isinstance(x, StrongSemilatticeSpec):
        raise UsageError("compose needs a strong_semilattice input")
    s = compose(x)
    lines = [
        f"order: {s.order}",
        f"components: {len(s.idempotents)}",
        f"idempotents: {_set_str(s.idempotents)}",
    ]
    return Report("compose", "pass", lines, [to_obj(s)])


def _cmd_decompose(args) -> Report:
    s = _as_dual(_load_one(args))
    spec = decompose(s)
    lines = [f"components: {spec.y.size}"]
    for i, b in enumerate(spec.braces):
        lines.append(f"component {i}: order {b.order}")
    for (a, b), f in sorted(spec.homs.items()):
        lines.append(f"hom {a}>{b}: {list(f)}")
    return Report("decompose", "pass", lines, [to_obj(spec)])


def _cmd_solve(args) -> Report:
    r = _as_solution(_load_one(args))
    rows = [
        f"{a} {b} -> {u} {v}"
        for a in range(r.order)
        for b in range(r.order)
        for u, v in [r.apply(a, b)]
    ]
    rows, cut = _limit(rows, args)
    lines = [f"order: {r.order}", *rows]
    if cut:
        lines.append("truncated")
    return Report("solve", "pass", lines, [to_obj(r)])


def _cmd_braid(args) -> Report:
    r = _as_solution(_load_one(args))
    bad = solutions.check_braid(r)
    if bad is None:
        n = r.order
        return Report("braid", "pass", [f"{n * n * n} triples checked"], [])
    return Report("braid", "fail", [f"BRAID-FAIL {bad[0]} {bad[1]} {bad[2]}"], [list(bad)])


def _cmd_period(args) -> Report:
    r = _as_solution(_load_one(args))
    p = solutions.period(r)
    return Report("period", "pass", [f"period {p}"], [])


def _cmd_regularity(args) -> Report:
    s = _as_dual(_load_one(args))
    rep = solutions.check_regularity(s)
    lines = [
        f"lambda bijective: {sum(rep.lambda_bijective)}/{s.order}",
        f"rho bijective: {sum(rep.rho_bijective)}/{s.order}",
    ]
    if rep.ok:
        return Report("regularity", "pass", lines, [])
    return Report("regularity", "fail", lines + [f"witness: {rep.witness}"], [list(rep.witness)])


def _cmd_ideals(args) -> Report:
    s = _as_dual(_load_one(args))
    enum = ideals.enumerate_ideals(s, mode=args.mode)
    shown, cut = _limit(list(enum.ideals), args)
    lines = [f"mode: {enum.mode}", f"count: {len(enum.ideals)}"]
    lines += [f"{_set_str(x)} {_tier(s, x)}" for x in shown]
    if cut:
        lines.append("truncated")
    return Report("ideals", "pass", lines, [sorted(sorted(x) for x in enum.ideals)])


def _special_set(name: str, fn):
    def cmd(args) -> Report:
        s = _as_dual(_load_one(args))
        x = fn(s)
        return Report(name, "pass", [f"{_set_str(x)} {_tier(s, x)}", f"size: {len(x)}"], [sorted(x)])

    return cmd


def _cmd_quotient(args) -> Report:
    s = _as_dual(_load_one(args))
    q = ideals.quotient(s, _members(args, s.order))
    lines = [
        f"order: {q.quotient.order}",
        f"projection: {list(q.projection)}",
        f"representatives: {list(q.class_rep)}",
    ]
    return Report("quotient", "pass", lines, [to_obj(q.quotient)])


def _cmd_homs(args) -> Report:
    a = _load_one(args)
    b = _load_one(args, "input2", "catalog2")
    if not isinstance(a, SkewBrace) or not isinstance(b, SkewBrace):
        raise UsageError("homs needs two skew_brace inputs")
    maps = enumerate_skew_brace_homs(a, b)
    shown, cut = _limit(maps, args)
    lines = [f"count: {len(maps)}"] + [str(list(f)) for f in shown]
    if cut:
        lines.append("truncated")
    return Report("homs", "pass", lines, [list(f) for f in maps])


def _cmd_iso(args) -> Report:
    s = _as_dual(_load_one(args))
    t = _as_dual(_load_one(args, "input2", "catalog2"))
    wit = are_isomorphic(s, t)
    if wit is None:
        return Report("iso", "fail", ["not isomorphic"], [])
    lines = [
        "isomorphic",
        f"eta: {list(wit.eta)}",
        f"map: {list(wit.global_map)}",
    ]
    return Report("iso", "pass", lines, [list(wit.global_map)])


def _cmd_series(args) -> Report:
    s = _as_dual(_load_one(args))
    if args.which == "right":
        rep = series.right_series(s)
    elif args.which == "socle":
        rep = series.socle_series(s)
    elif args.which == "ann":
        rep = series.annihilator_series(s)
    else:
        start = _members(args, s.order) if args.members is not None else None
        rep = series.gamma_series(s, start)
    status = "pass" if rep.terminated else "info"
    return Report(
        "series",
        status,
        [_series_line(rep)],
        [[sorted(x) for x in rep.chain]],
    )


def _cmd_sandwich(args) -> Report:
    s = _as_dual(_load_one(args))
    ann = series.annihilator_series(s)
    if not ann.terminated:
        last = ann.chain[-1]
        return Report(
            "sandwich",
            "fail",
            [
                f"annihilator series stalls at size {len(last)}; no annihilator series exists",
                _series_line(ann),
            ],
            [sorted(last)],
        )
    rep = series.verify_sandwich(s, ann.chain)
    lines = [
        f"annihilator series terminates at index {ann.index}",
        _series_line(ann),
        f"sandwich verified on {len(ann.chain)} positions",
    ]
    return Report("sandwich", "pass", lines, [[sorted(x) for x in rep.gamma_chain]])


def _cmd_classify(args) -> Report:
    s = _as_dual(_load_one(args))
    rep = series.classify(s)
    lines = [
        f"order: {rep.order}",
        f"idempotents: {rep.idempotent_count}",
        f"skew: {rep.is_skew}",
        f"brace: {rep.is_brace}",
        _series_line(rep.right),
        _series_line(rep.socle),
        _series_line(rep.annihilator),
        _series_line(rep.gamma),
    ]
    for i, comp in enumerate(rep.components):
        lines.append(f"component {i} (order {comp.order}):")
        lines.append("  " + _series_line(comp.right))
        lines.append("  " + _series_line(comp.socle))
        lines.append("  " + _series_line(comp.annihilator))
        lines.append("  " + _series_line(comp.gamma))
    return Report("classify", "info", lines, [])


COMMANDS = {
    "catalog": _cmd_catalog,
    "validate": _cmd_validate,
    "compose": _cmd_compose,
    "decompose": _cmd_decompose,
    "solve": _cmd_solve,
    "braid": _cmd_braid,
    "period": _cmd_period,
    "regularity": _cmd_regularity,
    "ideals": _cmd_ideals,
    "soc": _special_set("soc", ideals.socle),
    "fix": _special_set("fix", ideals.fix),
    "zl": _special_set("zl", ideals.left_center),
    "ann": _special_set("ann", ideals.annihilator),
    "quotient": _cmd_quotient,
    "homs": _cmd_homs,
    "iso": _cmd_iso,
    "series": _cmd_series,
    "sandwich": _cmd_sandwich,
    "classify": _cmd_classify,
}


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="wbk", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "series":
            p.add_argument("which", choices=["right", "socle", "ann", "gamma"])
        p.add_argument("--input")
        p.add_argument("--catalog")
        if name in ("homs", "iso"):
            p.add_argument("--input2")
            p.add_argument("--catalog2")
        if name in ("quotient", "series"):
            p.add_argument("--members")
        if name == "ideals":
            p.add_argument("--mode", choices=["auto", "exhaustive", "closure"], default="auto")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--limit", type=int)
        p.add_argument("--seed", type=int, default=0)
    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except (UsageError, ParseError, UnknownName, OrderTooLarge) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except NoPeriod as err:
        return _emit(
            Report(args.command, "fail", [f"NO-PERIOD tail={err.tail} cycle={err.cycle}"], []),
            args.format,
        )
    except NotAnIdeal as err:
        return _emit(
            Report(args.command, "fail", [f"not an ideal: {err.law} witness={err.witness}"], []),
            args.format,
        )
    except ValidationError as err:
        side = f" side={err.side}" if err.side else ""
        return _emit(
            Report(args.command, "fail", [f"violation: {err.law}{side} witness={err.witness}"], []),
            args.format,
        )
    return _emit(report, args.format)


if __name__ == "__main__":
    sys.exit(main())
