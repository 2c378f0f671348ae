"""Command-line front end.

Exit codes: 0 success, 1 a ``regular`` query answered "nonregular",
2 bad input (parse errors, axiom violations, unknown names).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import ingest
from .jacobian import JacobianReport, jacobian
from .lattice import QuotientInvariants
from .matroid import MatroidError, OrientedMatroid
from .regularity import METHOD_ALIASES, METHODS, RegularityReport, analyze, minors_sweep, rho
from .signed import CircuitFormatError, verify_circuit_axioms

COMMANDS = ("analyze", "rho", "regular", "jacobian", "minors", "axioms", "bases")
FORMATS = ("matrix", "graph", "circuits")
EXTENSIONS = {".mat": "matrix", ".matrix": "matrix", ".graph": "graph",
              ".circ": "circuits", ".circuits": "circuits"}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    named: str | None = None
    format: str | None = None
    method: str = "all"
    json: bool = False
    basis: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if (self.input_path is None) == (self.named is None):
            raise UsageError("give exactly one of --input or --named")
        if self.method != "all" and self.command != "regular":
            raise UsageError("--method only applies to 'regular'")
        if self.basis is not None and self.command != "jacobian":
            raise UsageError("--basis only applies to 'jacobian'")
        if self.input_path is not None and self.format is None:
            for ext, fmt in EXTENSIONS.items():
                if self.input_path.endswith(ext):
                    self.format = fmt
                    break
            else:
                raise UsageError("cannot infer --format from the file name")


def load_matroid(config: RunConfig) -> OrientedMatroid:
    if config.named is not None:
        return ingest.named(config.named)
    return ingest.load(config.input_path, config.format)


def _quotient_json(q: QuotientInvariants) -> dict:
    return {"invariant_factors": list(q.invariant_factors), "free_rank": q.free_rank, "order": q.order}


def jacobian_json(rep: JacobianReport) -> dict:
    return {
        "lattices": rep.lattices_used,
        "basis": list(rep.basis) if rep.basis is not None else None,
        "zE": _quotient_json(rep.quotient_zE),
        "direct": rep.direct,
        "circuit": _quotient_json(rep.quotient_circuit),
        "cocircuit": _quotient_json(rep.quotient_cocircuit),
        "num_bases": rep.num_bases,
        "all_orders_equal_bases": rep.all_orders_equal_bases,
    }


def _order_text(q: QuotientInvariants) -> str:
    return str(q.order) if q.finite else "infinite"


def jacobian_text(rep: JacobianReport) -> list[str]:
    return [
        f"lattices: {rep.lattices_used}",
        f"Z^E/(L+L*): {rep.quotient_zE}  order {_order_text(rep.quotient_zE)}"
        f"  ({'direct' if rep.direct else 'not direct'})",
        f"L#/L:       {rep.quotient_circuit}  order {_order_text(rep.quotient_circuit)}",
        f"L*#/L*:     {rep.quotient_cocircuit}  order {_order_text(rep.quotient_cocircuit)}",
        f"bases: {rep.num_bases}",
        f"orders equal bases: {'yes' if rep.all_orders_equal_bases else 'no'}",
    ]


def regularity_text(rep: RegularityReport) -> list[str]:
    lines = [f"{m}: {'regular' if v else 'nonregular'}" for m, v in rep.verdicts.items()]
    lines.append(f"rho: {rep.rho}")
    if rep.lattice_witness is not None:
        w = rep.lattice_witness
        lines.append(f"witness: circuit ({w.circuit}) is outside the lattice of basis {list(w.basis)}"
                     f" but fundamental for basis {list(w.other_basis)}")
    if rep.independent_circuits is not None:
        lines.append(f"independent circuits ({len(rep.independent_circuits)} > corank {rep.corank}): "
                     + ", ".join(f"({c})" for c in rep.independent_circuits))
    if rep.tu is not None and not rep.tu.regular:
        t = rep.tu
        if t.violation is not None:
            v = t.violation
            lines.append(f"candidate matrix of basis {list(t.basis)}: minor rows {list(v.rows)} "
                         f"cols {list(v.cols)} has determinant {v.determinant}")
        if not t.circuits_match:
            lines.append(f"candidate matrix of basis {list(t.basis)} realizes different circuits: "
                         f"missing {[str(c) for c in t.missing_circuits]}, "
                         f"extra {[str(c) for c in t.extra_circuits]}")
    return lines


def run(config: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        M = load_matroid(config)
    except (ingest.InputFormatError, CircuitFormatError, MatroidError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"error: {msg}", file=err)
        return 2

    cmd = config.command
    payload: dict = {}
    lines: list[str] = []
    code = 0
    if cmd in ("analyze", "rho", "regular", "bases"):
        payload.update(rank=M.rank, corank=M.corank)
        lines += [f"ground set: {M.ground_size}", f"rank: {M.rank}", f"corank: {M.corank}"]

    if cmd == "rho":
        payload["rho"] = rho(M)
        lines.append(f"rho: {payload['rho']}")
    elif cmd in ("analyze", "regular"):
        methods = METHODS if config.method == "all" else (METHOD_ALIASES[config.method],)
        rep = analyze(M, methods)
        payload["rho"] = rep.rho
        payload["regular"] = dict(rep.verdicts)
        lines += regularity_text(rep)
        if cmd == "regular" and not rep.regular:
            code = 1
        if cmd == "analyze":
            jac = jacobian(M)
            payload["jacobian"] = jacobian_json(jac)
            payload["bases_count"] = len(M.bases)
            lines += jacobian_text(jac)
    elif cmd == "jacobian":
        try:
            jac = jacobian(M, config.basis)
        except ValueError as exc:
            print(f"error: {exc}", file=err)
            return 2
        payload["jacobian"] = jacobian_json(jac)
        payload["bases_count"] = jac.num_bases
        lines += jacobian_text(jac)
    elif cmd == "minors":
        sweep = minors_sweep(M)
        payload["minors"] = [{"element": r.element, "rho": r.rho, "rho_deleted": r.rho_deleted,
                              "rho_contracted": r.rho_contracted, "ok": r.ok} for r in sweep.rows]
        payload["monotone"] = sweep.ok
        lines.append("element  rho  rho(M\\e)  rho(M/e)  ok")
        for r in sweep.rows:
            lines.append(f"{r.element:>7}  {r.rho:>3}  {r.rho_deleted:>8}  {r.rho_contracted:>8}  "
                         f"{'yes' if r.ok else 'NO'}")
        lines.append(f"monotone: {'yes' if sweep.ok else 'no'}")
    elif cmd == "axioms":
        report = verify_circuit_axioms(M.all_circuits())
        payload["axioms_passed"] = report.passed
        payload["circuits"] = len(M.circuits)
        lines.append(f"{len(M.circuits)} circuit pairs on {M.ground_size} elements")
        lines.append(str(report))
        if not report.passed:
            code = 2
    elif cmd == "bases":
        payload["bases_count"] = len(M.bases)
        payload["bases"] = [list(b) for b in M.bases]
        lines.append(f"bases: {len(M.bases)}")
        lines += [" ".join(map(str, b)) if b else "(empty)" for b in M.bases]

    if config.json:
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print("\n".join(lines), file=out)
    return code


def _basis_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad basis {text!r}; expected e1,e2,...") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regmat", description="Regularity, rho and Jacobian groups of oriented matroids.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="input file")
    src.add_argument("--named", metavar="NAME", help=f"catalog matroid: {', '.join(ingest.CATALOG)}")
    common.add_argument("--format", choices=FORMATS, help="input file format (default: from extension)")
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    helps = {
        "analyze": "all regularity deciders, rho and the Jacobian groups",
        "rho": "the irregularity parameter",
        "regular": "regularity verdict; exit status 1 when nonregular",
        "jacobian": "candidate Jacobian groups and basis count",
        "minors": "rho of every single-element deletion and contraction",
        "axioms": "check the oriented-matroid circuit axioms",
        "bases": "list all bases",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name], description=helps[name])
        if name == "regular":
            p.add_argument("--method", default="all", choices=["all", *METHOD_ALIASES],
                           help="run a single decider; the four-way agreement check is then skipped")
        if name == "jacobian":
            p.add_argument("--basis", type=_basis_arg, help="use the lattices of this basis, e.g. 1,2")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(command=args.command, input_path=args.input, named=args.named,
                           format=args.format, method=getattr(args, "method", "all"),
                           json=args.json, basis=getattr(args, "basis", None))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
