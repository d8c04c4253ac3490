"""Command-line front end.

Exit status: 0 success or equal, 1 a computed inequality or failed check,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import formats
from .algebra import (
    coxeter_polynomial,
    derived_invariant_report,
    gamma_zero_category,
    incidence_category,
)
from .errors import IntervalCatError
from .experiments import exhaustive_sweep, orientations_int_search, random_sweep
from .gamma import build_gamma, interval_ideal_map
from .paths import conjecture_report, dyck_paths_poset, lattice_paths_poset
from .poset import (
    chain,
    connected_components,
    interval_poset,
    linear_extension,
    product,
    to_dot,
)

EXIT_OK, EXIT_DIFFER, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def print_help(self, file=None):
        raise _HelpExit(self.format_help())

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "")
        raise _HelpExit(message or "")


class _HelpExit(Exception):
    pass


def _pair(text: str, what: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"{what} needs the form a:b")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"{what} needs integers, got {text!r}") from None


def category_from_operand(operand: str):
    """Resolve a comparison operand to a thin category.

    Accepted: a poset file, ``int:<file>``, ``prod:<f1>:<f2>``, ``chain:<n>``,
    ``dyck:a:b``, ``lattice:a:b``, ``gamma:<idealmap>`` (Gamma as a poset),
    ``zero:<idealmap>`` (kGamma_0).
    """
    kind, _, rest = operand.partition(":")
    if not rest:
        return incidence_category(formats.load_poset(operand))
    if kind == "int":
        return incidence_category(interval_poset(formats.load_poset(rest))[0])
    if kind == "prod":
        f1, sep, f2 = rest.partition(":")
        if not sep:
            raise UsageError("prod needs prod:<file1>:<file2>")
        return incidence_category(product(formats.load_poset(f1), formats.load_poset(f2)))
    if kind == "chain":
        try:
            return incidence_category(chain(int(rest)))
        except ValueError:
            raise UsageError(f"chain needs an integer, got {rest!r}") from None
    if kind == "dyck":
        return incidence_category(dyck_paths_poset(*_pair(rest, "dyck")))
    if kind == "lattice":
        return incidence_category(lattice_paths_poset(*_pair(rest, "lattice")))
    if kind == "gamma":
        return incidence_category(build_gamma(formats.load_idealmap(rest)).gamma)
    if kind == "zero":
        return gamma_zero_category(build_gamma(formats.load_idealmap(rest)))
    # no known prefix: treat the whole thing as a path
    return incidence_category(formats.load_poset(operand))


def _cmd_poset(args, out):
    P = formats.load_poset(args.file)
    if args.action == "dot":
        out.append(to_dot(P).rstrip("\n"))
        return EXIT_OK
    out.append(f"size {P.size}")
    out.append(f"relations {P.relation_count()}")
    out.append("covers " + " ".join(f"{u}<{v}" for u, v in P.covers))
    out.append(f"components {len(connected_components(P))}")
    out.append("linear-extension " + " ".join(map(str, linear_extension(P))))
    return EXIT_OK


def _cmd_intervals(args, out):
    P = formats.load_poset(args.file)
    Int, pairs = interval_poset(P)
    for k, (a, b) in enumerate(pairs):
        out.append(f"# {k} = [{a},{b}]")
    out.append(formats.dump_poset(Int).rstrip("\n"))
    return EXIT_OK


def _cmd_coxeter(args, out):
    if args.gamma:
        g = build_gamma(formats.load_idealmap(args.gamma))
        T = gamma_zero_category(g) if args.zero else incidence_category(g.gamma)
    elif args.file:
        P = formats.load_poset(args.file)
        T = gamma_zero_category(build_gamma(interval_ideal_map(P))) if args.zero else incidence_category(P)
    else:
        raise UsageError("coxeter needs a poset file or --gamma <idealmap>")
    poly = coxeter_polynomial(T)
    out.append(poly.pretty() if args.pretty else str(poly))
    return EXIT_OK


def _cmd_compare(args, out):
    rep = derived_invariant_report(category_from_operand(args.operand_a), category_from_operand(args.operand_b))
    out.extend(rep.lines())
    out.append(rep.text())
    return EXIT_OK if rep.all_equal else EXIT_DIFFER


def _cmd_verify(args, out):
    tilting = not args.no_tilting
    if args.random is not None:
        out.append(f"random sweep: {args.random} instances, seed {args.seed}, |X|,|Y| <= {args.max_size}")
        results = random_sweep(args.random, args.seed, args.max_size, args.max_size, tilting, args.jobs)
    else:
        nx, ny = args.exhaustive or (3, 3)
        out.append(f"exhaustive sweep: |X| <= {nx}, |Y| <= {ny} up to isomorphism, all ideal maps")
        results = exhaustive_sweep(nx, ny, tilting, args.jobs)
    failures = [r for r in results if not r.passed]
    for r in results:
        if args.verbose or not r.passed:
            out.append(r.line())
    out.append(f"checked {len(results)} instances, largest Gamma {max((r.gamma_size for r in results), default=0)}")
    if failures:
        out.append(f"{len(failures)} instances FAIL")
        return EXIT_DIFFER
    out.append("all instances pass")
    return EXIT_OK


def _cmd_conjecture(args, out):
    rep = conjecture_report(args.a, args.b)
    out.extend(rep.lines())
    return EXIT_OK if rep.polynomials_equal else EXIT_DIFFER


def _cmd_orientations(args, out):
    out.extend(orientations_int_search(args.n).lines())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="intervalcat", description="Interval categories of finite posets and derived invariants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("poset", help="describe a poset file or export its Hasse diagram")
    s.add_argument("action", choices=["show", "dot"])
    s.add_argument("file")
    s.set_defaults(func=_cmd_poset)

    s = sub.add_parser("intervals", help="print the interval poset in poset-file format")
    s.add_argument("file")
    s.set_defaults(func=_cmd_intervals)

    s = sub.add_parser("coxeter", help="Coxeter polynomial, coefficients in ascending degree")
    s.add_argument("file", nargs="?")
    s.add_argument("--gamma", metavar="IDEALMAP")
    s.add_argument("--zero", action="store_true", help="use the zero-relation category instead of the poset")
    s.add_argument("--pretty", action="store_true")
    s.set_defaults(func=_cmd_coxeter)

    s = sub.add_parser("compare", help="compare derived invariants of two operands")
    s.add_argument("operand_a")
    s.add_argument("operand_b")
    s.set_defaults(func=_cmd_compare)

    s = sub.add_parser("verify-theorem", help="tilting and Coxeter checks over many ideal maps")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", nargs=2, type=int, metavar=("NX", "NY"))
    mode.add_argument("--random", type=int, metavar="N")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-size", type=int, default=4)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-tilting", action="store_true", help="only compare Coxeter polynomials")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("conjecture", help="Coxeter comparison of A_{a+b} x Dyck_{a,b} with L_{a,b}")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.set_defaults(func=_cmd_conjecture)

    s = sub.add_parser("orientations-int", help="interval posets of all orientations of a line")
    s.add_argument("n", type=int)
    s.set_defaults(func=_cmd_orientations)
    return p


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Parse and execute; returns the exit status and the text written to stdout."""
    out: list[str] = []
    try:
        args = build_parser().parse_args(list(argv))
        status = args.func(args, out)
    except _HelpExit as exc:
        return EXIT_OK, str(exc)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}".rstrip() + "\n"
    except (IntervalCatError, OSError, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    return status, "\n".join(out) + "\n" if out else ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if status == EXIT_USAGE else sys.stdout
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
