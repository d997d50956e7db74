"""Command-line surface.

Subcommands compute single counts, regenerate value tables, and run
cross-oracle verification sweeps. Exit codes: 0 success/agreement, 1 usage
error, 2 verification failure. All numbers print in plain decimal so output
diffs cleanly.
"""

from __future__ import annotations

import argparse
import enum
import json
import re
import sys
from dataclasses import dataclass

from . import combinum, formulas, graphcore, lonesum
from .formulas import BipartiteSpec, Modification

MAX_VERIFY_N = 4

__all__ = ["TableFamily", "TableRequest", "render_table", "main", "entry"]


class _CliError(Exception):
    """Usage-level failure; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


class TableFamily(enum.Enum):
    COMPLETE = "complete"
    PLUS_EDGE = "plus-edge"
    MINUS_EDGE = "minus-edge"


@dataclass(frozen=True)
class TableRequest:
    """Grid of counts over inclusive n1 and n2 ranges."""

    family: TableFamily
    n1_range: tuple
    n2_range: tuple
    fmt: str = "csv"

    def __post_init__(self):
        for lo, hi in (self.n1_range, self.n2_range):
            if lo > hi:
                raise ValueError(f"empty range {lo}..{hi}")
            if lo < 0:
                raise ValueError("range values must be non-negative")
        if self.family is TableFamily.PLUS_EDGE and self.n1_range[0] < 2:
            raise ValueError("plus-edge tables need n1 >= 2")
        if self.family is TableFamily.MINUS_EDGE and (
            self.n1_range[0] < 1 or self.n2_range[0] < 1
        ):
            raise ValueError("minus-edge tables need n1, n2 >= 1")
        if self.fmt not in ("csv", "markdown", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")


_FAMILY_COUNTERS = {
    TableFamily.COMPLETE: formulas.count_complete_bipartite,
    TableFamily.PLUS_EDGE: formulas.count_plus_edge,
    TableFamily.MINUS_EDGE: formulas.count_minus_edge,
}


def _table_cells(req: TableRequest, symmetric_blank: bool):
    """Cell grid for the request; None marks a blank lower-triangle cell.

    Blanks only apply to the symmetric families (complete, minus-edge) and
    only when asked for; by default the lower triangle is filled via the
    symmetry of those counts.
    """
    counter = _FAMILY_COUNTERS[req.family]
    blankable = req.family is not TableFamily.PLUS_EDGE
    rows = []
    for a in range(req.n1_range[0], req.n1_range[1] + 1):
        row = []
        for b in range(req.n2_range[0], req.n2_range[1] + 1):
            if symmetric_blank and blankable and b < a:
                row.append(None)
            else:
                row.append(counter(a, b))
        rows.append(row)
    return rows


def render_table(req: TableRequest, symmetric_blank: bool = False) -> str:
    """Deterministic text rendering of a table request."""
    cells = _table_cells(req, symmetric_blank)
    n1s = list(range(req.n1_range[0], req.n1_range[1] + 1))
    n2s = list(range(req.n2_range[0], req.n2_range[1] + 1))
    corner = "n1\\n2"
    if req.fmt == "csv":
        lines = [",".join([corner] + [str(b) for b in n2s])]
        for a, row in zip(n1s, cells):
            lines.append(
                ",".join([str(a)] + ["" if v is None else str(v) for v in row])
            )
        return "\n".join(lines)
    if req.fmt == "markdown":
        header = "| " + " | ".join([corner] + [str(b) for b in n2s]) + " |"
        rule = "|" + "|".join([" --- "] * (len(n2s) + 1)) + "|"
        lines = [header, rule]
        for a, row in zip(n1s, cells):
            lines.append(
                "| "
                + " | ".join([str(a)] + ["" if v is None else str(v) for v in row])
                + " |"
            )
        return "\n".join(lines)
    # json
    payload = {
        "family": req.family.value,
        "n1": n1s,
        "n2": n2s,
        "rows": cells,
    }
    return json.dumps(payload)


def _parse_range(text: str):
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text) or re.fullmatch(r"(\d+)", text)
    if m is None:
        raise _CliError(f"bad range {text!r}; expected LO..HI or a single value")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.lastindex == 2 else lo
    if lo > hi:
        raise _CliError(f"empty range {text!r}")
    return lo, hi


def _modification_from_args(args) -> Modification:
    if getattr(args, "plus_edge", False):
        return Modification.PLUS_EDGE_BLOCK1
    if getattr(args, "minus_edge", False):
        return Modification.MINUS_EDGE
    return Modification.NONE


def _build_graph(spec: BipartiteSpec) -> graphcore.Graph:
    g = graphcore.complete_bipartite(spec.n1, spec.n2)
    if spec.modification is Modification.PLUS_EDGE_BLOCK1:
        g = graphcore.with_edge_added_in_block1(g, spec.n1)
    elif spec.modification is Modification.MINUS_EDGE:
        g = graphcore.with_edge_removed(g)
    return g


def _format_polynomial(coeffs) -> str:
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            x = "x" if power == 1 else f"x^{power}"
            body = x if mag == 1 else f"{mag}{x}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Command handlers


def _cmd_count(args) -> int:
    spec = _spec_from_args(args)
    value = formulas.count_for_spec(spec)
    if not args.verify:
        print(value)
        return 0
    g = _build_graph(spec)
    if len(g.edges) > graphcore.MAX_ENUM_EDGES:
        raise _CliError(
            f"--verify needs at most {graphcore.MAX_ENUM_EDGES} edges; "
            f"this graph has {len(g.edges)}"
        )
    if g.vertex_count > graphcore.MAX_CHROMATIC_VERTICES:
        raise _CliError(
            f"--verify needs at most {graphcore.MAX_CHROMATIC_VERTICES} vertices; "
            f"this graph has {g.vertex_count}"
        )
    brute = graphcore.count_acyclic_bruteforce(g)
    stanley = graphcore.stanley_count(g)
    agree = value == brute == stanley
    verdict = "AGREE" if agree else "DISAGREE"
    print(f"{value} {verdict} bruteforce={brute} stanley={stanley}")
    return 0 if agree else 2


def _spec_from_args(args) -> BipartiteSpec:
    try:
        return BipartiteSpec(args.n1, args.n2, _modification_from_args(args))
    except ValueError as exc:
        raise _CliError(str(exc)) from exc


def _cmd_table(args) -> int:
    try:
        req = TableRequest(
            family=TableFamily(args.family),
            n1_range=_parse_range(args.n1_range),
            n2_range=_parse_range(args.n2_range),
            fmt=args.format,
        )
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    print(render_table(req, symmetric_blank=args.symmetric_blank))
    return 0


def _cmd_polybernoulli(args) -> int:
    print(combinum.poly_bernoulli_neg(args.n, args.m))
    return 0


def _cmd_stirling(args) -> int:
    print(combinum.stirling2(args.n, args.k))
    return 0


def _cmd_chromatic(args) -> int:
    spec = _spec_from_args(args)
    g = _build_graph(spec)
    try:
        p = graphcore.chromatic_polynomial(g)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    print(_format_polynomial(p.coefficients))
    return 0


def _cmd_lonesum_check(args) -> int:
    if args.path is None:
        text = sys.stdin.read()
    else:
        try:
            with open(args.path, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise _CliError(str(exc)) from exc
    try:
        m = lonesum.BinaryMatrix.from_text(text)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    if lonesum.is_lonesum(m):
        print("lonesum")
    else:
        (i, i2), (j, j2) = lonesum.find_forbidden_submatrix(m)
        print(f"not-lonesum: rows ({i},{i2}) cols ({j},{j2})")
    return 0


def _cmd_lonesum_count(args) -> int:
    try:
        print(lonesum.count_lonesum_bruteforce(args.n1, args.n2))
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    return 0


# ---------------------------------------------------------------------------
# verify-all


def _cmd_verify_all(args) -> int:
    n = args.max_n
    if not 1 <= n <= MAX_VERIFY_N:
        raise _CliError(
            f"--max-n must be between 1 and {MAX_VERIFY_N} (brute-force cap)"
        )
    failures = 0
    for name, ok, detail in _verification_checks(n):
        if ok:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {detail}")
    if failures:
        print(f"{failures} check(s) failed")
        return 2
    print("all checks passed")
    return 0


def _verification_checks(n: int):
    yield _check_triple_agreement(
        "complete bipartite: formula = brute force = Stanley",
        [(a, b, Modification.NONE) for a in range(1, n + 1) for b in range(1, n + 1)],
    )
    yield _check_triple_agreement(
        "plus-edge: formula = brute force = Stanley",
        [
            (a, b, Modification.PLUS_EDGE_BLOCK1)
            for a in range(2, n + 1)
            for b in range(1, n + 1)
        ],
    )
    yield _check_triple_agreement(
        "minus-edge: formula = brute force = Stanley",
        [
            (a, b, Modification.MINUS_EDGE)
            for a in range(1, n + 1)
            for b in range(1, n + 1)
        ],
    )
    yield _check_lonesum_counts(n)
    yield _check_poly_bernoulli_symmetry()
    yield _check_flippable(n)
    yield _check_bijection(min(n, 3))


def _check_triple_agreement(name, specs):
    for a, b, mod in specs:
        spec = BipartiteSpec(a, b, mod)
        value = formulas.count_for_spec(spec)
        g = _build_graph(spec)
        brute = graphcore.count_acyclic_bruteforce(g)
        stanley = graphcore.stanley_count(g)
        if not value == brute == stanley:
            return (
                name,
                False,
                f"({a},{b},{mod.value}): formula={value} "
                f"bruteforce={brute} stanley={stanley}",
            )
    return f"{name} ({len(specs)} graphs)", True, ""


def _check_lonesum_counts(n):
    name = "lonesum count = poly-Bernoulli = formula"
    pairs = [(a, b) for a in range(n + 1) for b in range(n + 1)]
    for a, b in pairs:
        brute = lonesum.count_lonesum_bruteforce(a, b)
        pb = combinum.poly_bernoulli_neg(a, b)
        cc = formulas.count_complete_bipartite(a, b)
        if not brute == pb == cc:
            return name, False, f"({a},{b}): brute={brute} pb={pb} formula={cc}"
    return f"{name} ({len(pairs)} shapes)", True, ""


def _check_poly_bernoulli_symmetry():
    name = "poly-Bernoulli symmetry up to 12"
    for a in range(13):
        for b in range(a + 1, 13):
            x = combinum.poly_bernoulli_neg(a, b)
            y = combinum.poly_bernoulli_neg(b, a)
            if x != y:
                return name, False, f"({a},{b}): {x} != {y}"
    return name, True, ""


def _check_flippable(n):
    name = "flippable count: parity, halving identity, brute-force match"
    for a in range(1, 8):
        for b in range(1, 8):
            x = formulas.flippable_count_formula(a, b)
            if x % 2 != 0:
                return name, False, f"({a},{b}): odd flippable count {x}"
            lhs = 2 * formulas.count_minus_edge(a, b) + x
            rhs = 2 * formulas.count_complete_bipartite(a, b)
            if lhs != rhs:
                return name, False, f"({a},{b}): {lhs} != {rhs}"
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            g = graphcore.complete_bipartite(a, b)
            formula = formulas.flippable_count_formula(a, b)
            if a <= 3 and b <= 3:
                probe_edges = range(len(g.edges))
            else:
                probe_edges = (0,)
            for e in probe_edges:
                brute = graphcore.flippable_count_bruteforce(g, e)
                if brute != formula:
                    return (
                        name,
                        False,
                        f"({a},{b}) edge {e}: brute={brute} formula={formula}",
                    )
    return name, True, ""


def _check_bijection(n):
    name = f"orientation/matrix bijection up to ({n},{n})"
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            g = graphcore.complete_bipartite(a, b)
            for bits in range(1 << (a * b)):
                o = graphcore.Orientation(g, bits)
                m = lonesum.orientation_to_matrix(o, a, b)
                if lonesum.matrix_to_orientation(m) != o:
                    return name, False, f"({a},{b}) bits={bits}: round trip broke"
                acyclic = graphcore.is_acyclic(o)
                if lonesum.is_lonesum(m) != acyclic:
                    return name, False, f"({a},{b}) bits={bits}: lonesum != acyclic"
                if lonesum.has_directed_4cycle(o) == acyclic:
                    return name, False, f"({a},{b}) bits={bits}: 4-cycle check broke"
    return name, True, ""


# ---------------------------------------------------------------------------
# Parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="orientcount",
        description="Exact acyclic-orientation counts for complete bipartite "
        "graphs and their one-edge modifications.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_args(p):
        p.add_argument("--n1", type=int, required=True, help="size of block 1")
        p.add_argument("--n2", type=int, required=True, help="size of block 2")
        mod = p.add_mutually_exclusive_group()
        mod.add_argument(
            "--plus-edge",
            action="store_true",
            help="add one edge inside block 1 (needs n1 >= 2); for an edge "
            "in block 2, swap --n1 and --n2",
        )
        mod.add_argument(
            "--minus-edge", action="store_true", help="delete one edge"
        )

    p = sub.add_parser("count", help="exact count for one graph")
    add_spec_args(p)
    p.add_argument(
        "--verify",
        action="store_true",
        help="also run brute force and Stanley oracles and print a verdict",
    )
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="grid of counts over index ranges")
    p.add_argument("family", choices=[f.value for f in TableFamily])
    p.add_argument("n1_range", help="inclusive range, e.g. 2..7")
    p.add_argument("n2_range", help="inclusive range, e.g. 2..7")
    p.add_argument("--format", choices=["csv", "markdown", "json"], default="csv")
    p.add_argument(
        "--symmetric-blank",
        action="store_true",
        help="leave lower-triangle cells of symmetric families blank",
    )
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("polybernoulli", help="negative-order poly-Bernoulli number")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_polybernoulli)

    p = sub.add_parser("stirling", help="Stirling number of the second kind")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_stirling)

    p = sub.add_parser("chromatic", help="chromatic polynomial of a family graph")
    add_spec_args(p)
    p.set_defaults(func=_cmd_chromatic)

    p = sub.add_parser("lonesum-check", help="test a 0/1 matrix for the lonesum property")
    p.add_argument(
        "path",
        nargs="?",
        default=None,
        help="matrix file (one 0/1 line per row); reads stdin when omitted",
    )
    p.set_defaults(func=_cmd_lonesum_check)

    p = sub.add_parser("lonesum-count", help="brute-force count of lonesum matrices")
    p.add_argument("n1", type=int)
    p.add_argument("n2", type=int)
    p.set_defaults(func=_cmd_lonesum_count)

    p = sub.add_parser("verify-all", help="cross-check formulas against all oracles")
    p.add_argument(
        "--max-n",
        type=int,
        default=3,
        help=f"largest block size for brute-force stages (1..{MAX_VERIFY_N})",
    )
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    raise SystemExit(main())
