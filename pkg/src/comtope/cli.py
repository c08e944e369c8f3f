"""Command-line interface.

Exit codes: 0 on success, 1 on domain errors (invalid tope sets, points on
hyperplanes, size guard), 2 on usage or parse errors.  Data goes to stdout
(or ``-o``), diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .arrangement import DEFAULT_EPSILON, apartment_to_com
from .axioms import AXIOMS, axiom_report, check_fs, check_se
from .errors import ComError, ConsistencyError, FormatError
from .formats import (
    covectors_to_json,
    format_covectors,
    read_arrangement,
    read_covectors,
)
from .minors import contract, delete
from .poset import build_poset, f_polynomial, render_polynomial, to_dot
from .reconstruction import TopeSet, reconstruct_com, reconstruct_om, topes_of
from .signs import format_vector

_AXIOM_NAMES = {"fs": "FS", "se": "SE", "c": "C", "sym": "Sym", "z": "Z"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("epsilon must be positive")
    return value


def _labels(text):
    return [s.strip() for s in text.split(",") if s.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-o", "--output", help="write data here instead of stdout")

    parser = _Parser(prog="comtope", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="axiom report and COM/OM classification")
    p.add_argument("file", help="input path, or - for stdin")

    p = sub.add_parser("reconstruct", parents=[common], help="covectors from a tope file")
    p.add_argument("file", help="input path, or - for stdin")
    p.add_argument("--om", action="store_true", help="use the oriented-matroid formula X o T")
    p.add_argument("--verify", action="store_true", help="check the result is a COM with these topes")
    p.add_argument("--force", action="store_true", help="allow common supports above 20 elements")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("topes", parents=[common], help="maximal covectors of a covector file")
    p.add_argument("file", help="input path, or - for stdin")

    p = sub.add_parser("minor", parents=[common], help="deletion or contraction")
    p.add_argument("file", help="input path, or - for stdin")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--delete", type=_labels, metavar="E1,E2")
    group.add_argument("--contract", type=_labels, metavar="E1,E2")

    p = sub.add_parser("poset", parents=[common], help="covector poset with ranks")
    p.add_argument("file", help="input path, or - for stdin")
    p.add_argument("--dot", action="store_true", help="emit the Hasse diagram as Graphviz DOT")

    p = sub.add_parser("fpoly", parents=[common], help="f-polynomial")
    p.add_argument("file", nargs="?", help="input path, or - for stdin")
    p.add_argument("--arrangement", metavar="JSON", help="arrangement document instead of a covector file")
    p.add_argument("--epsilon", type=_positive_float, default=DEFAULT_EPSILON)

    p = sub.add_parser("from-arrangement", parents=[common], help="apartment to covector file")
    p.add_argument("file", help="input path, or - for stdin")
    p.add_argument("--reduce", action="store_true", help="delete hyperplanes missing the apartment")
    p.add_argument("--epsilon", type=_positive_float, default=DEFAULT_EPSILON)
    p.add_argument("--force", action="store_true")
    return parser


def _emit(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_system(args, system):
    if args.format == "json":
        _emit(args, json.dumps(covectors_to_json(system)) + "\n")
    else:
        _emit(args, format_covectors(system))


def _describe_witness(name, witness):
    if name == "se":
        x, y, e = witness
        return f"{format_vector(x)} {format_vector(y)} e={e + 1}"
    if name in ("fs", "c"):
        return " ".join(format_vector(v) for v in witness)
    return format_vector(witness)


def _cmd_check(args):
    system = read_covectors(args.file)
    report = axiom_report(system)
    if args.format == "json":
        payload = {name: getattr(report, name) for name in AXIOMS}
        payload["witnesses"] = {
            name: _witness_json(name, w) for name, w in report.witnesses.items()
        }
        payload["com"] = report.com
        payload["om"] = report.om
        _emit(args, json.dumps(payload) + "\n")
        return 0
    lines = [f"{'axiom':<6}{'holds':<7}witness"]
    for name in AXIOMS:
        ok = getattr(report, name)
        witness = "-" if ok else _describe_witness(name, report.witnesses[name])
        lines.append(f"{_AXIOM_NAMES[name]:<6}{'yes' if ok else 'no':<7}{witness}")
    lines.append(f"COM: {'yes' if report.com else 'no'}")
    lines.append(f"OM: {'yes' if report.om else 'no'}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _witness_json(name, witness):
    if name == "se":
        x, y, e = witness
        return {"x": list(x), "y": list(y), "element": e}
    if name in ("fs", "c"):
        return [list(v) for v in witness]
    return list(witness)


def _cmd_reconstruct(args):
    given = read_covectors(args.file)
    topes = TopeSet.from_system(given)
    build = reconstruct_om if args.om else reconstruct_com
    result = build(topes, force=args.force, workers=args.workers)
    if args.verify:
        if not (check_fs(result)[0] and check_se(result)[0]):
            print("warning: result is not a conditional oriented matroid", file=sys.stderr)
        if topes_of(result).topes != topes.topes:
            print("warning: topes of the result differ from the input", file=sys.stderr)
    _emit_system(args, result)
    return 0


def _cmd_topes(args):
    _emit_system(args, topes_of(read_covectors(args.file)).as_system())
    return 0


def _cmd_minor(args):
    system = read_covectors(args.file)
    if args.delete is not None:
        result = delete(system, args.delete)
    else:
        result = contract(system, args.contract)
    _emit_system(args, result)
    return 0


def _cmd_poset(args):
    system = read_covectors(args.file)
    poset = build_poset(system)
    if args.dot:
        _emit(args, to_dot(poset))
    elif args.format == "json":
        payload = covectors_to_json(system)
        payload.update(
            ranks=list(poset.ranks),
            covers=[list(c) for c in poset.covers],
            system_rank=poset.system_rank,
            graded=poset.graded,
        )
        _emit(args, json.dumps(payload) + "\n")
    else:
        lines = [f"# system rank {poset.system_rank}"]
        lines += [f"{format_vector(x)} {r}" for x, r in zip(poset.elements, poset.ranks)]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_fpoly(args):
    if (args.file is None) == (args.arrangement is None):
        raise _UsageError("fpoly: give exactly one of FILE or --arrangement")
    if args.arrangement:
        arrangement, points = read_arrangement(args.arrangement)
        system = apartment_to_com(arrangement, points, epsilon=args.epsilon)
    else:
        system = read_covectors(args.file)
    poly = f_polynomial(system)
    rendered = render_polynomial(poly)
    if args.format == "json":
        coefficients = {str(k): c for k, c in poly.coefficients.items()}
        _emit(args, json.dumps({"coefficients": coefficients, "rendered": rendered}) + "\n")
    else:
        _emit(args, rendered + "\n")
    return 0


def _cmd_from_arrangement(args):
    arrangement, points = read_arrangement(args.file)
    system = apartment_to_com(
        arrangement, points, epsilon=args.epsilon, reduce=args.reduce, force=args.force
    )
    _emit_system(args, system)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "reconstruct": _cmd_reconstruct,
    "topes": _cmd_topes,
    "minor": _cmd_minor,
    "poset": _cmd_poset,
    "fpoly": _cmd_fpoly,
    "from-arrangement": _cmd_from_arrangement,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"comtope: parse error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"comtope: internal error: {exc}", file=sys.stderr)
        return 3
    except ComError as exc:
        print(f"comtope: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
