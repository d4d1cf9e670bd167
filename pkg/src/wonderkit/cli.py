"""Command-line interface: ``wonderkit <group> <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 parse or input error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import dot
from .diagorbits import g2_table, minuscule_classify, two_root_classify
from .errors import CapExceeded, WonderkitError
from .pieces import (all_pieces, central_fiber_pieces, closure_leq, closure_maximal,
                     i_G, maximal_pieces)
from .report import ReportDocument
from .reps import dim_weyl, weight_poset, weight_system
from .rootsys import build_root_system, parse_type
from .torus import (boundary_components, exponent_matrix,
                    normality_check_A, torus_orbit_poset)
from .traces import conjecture_scan
from .weyl import weyl_group

FORMATS = ("table", "json", "csv", "dot")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


# -- argument helpers --------------------------------------------------------------------

def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise WonderkitError(f"expected comma-separated integers, got {text!r}") from None


def _rs(args):
    if not args.type:
        raise WonderkitError("--type is required")
    return build_root_system(args.type)


def _weight(args, rs) -> tuple:
    if args.weight is not None:
        lam = _ints(args.weight)
        if len(lam) != rs.rank:
            raise WonderkitError(f"weight needs {rs.rank} coordinates")
        if any(x < 0 for x in lam):
            raise WonderkitError("weight must be dominant")
        return lam
    if args.node is not None:
        if not 1 <= args.node <= rs.rank:
            raise WonderkitError(f"node {args.node} out of range")
        return rs.fundamental_weight(args.node)
    raise WonderkitError("give --weight or --node")


def _word(w_word) -> str:
    return "".join(f"s{i}" for i in w_word) or "e"


def _types_for(args) -> list:
    """A bare family letter with --max-rank expands to every rank up to it."""
    t = (args.type or "").strip()
    if len(t) == 1 and t.isalpha():
        fam = t.upper()
        if fam not in _MIN_RANK:
            raise WonderkitError(f"rank sweep is only supported for families A-D, got {t}")
        if args.max_rank is None:
            raise WonderkitError("a bare family letter needs --max-rank")
        return [f"{fam}{n}" for n in range(_MIN_RANK[fam], args.max_rank + 1)]
    parse_type(t)
    return [t]


def _require_dot(args, command):
    if args.format == "dot":
        raise WonderkitError(f"{command} has no DOT rendering")


# -- commands --------------------------------------------------------------------------------

def cmd_roots(args):
    _require_dot(args, "roots")
    rs = _rs(args)
    rows = []
    for r in list(rs.positive_roots) + list(rs.negative_roots):
        rows.append({"root": list(r), "weight": list(rs.to_weight(r)),
                     "height": rs.height(r), "positive": rs.is_positive(r)})
    return ReportDocument("roots", rs.name, rows)


def cmd_weyl(args):
    rs = _rs(args)
    W = weyl_group(rs)
    sub = args.command
    if sub == "bruhat-dot":
        els = (W.enumerate_group(args.cap) if args.max_length is None
               else W.enumerate_up_to_length(args.max_length, args.cap))
        covers = W.bruhat_covers(els)
        if args.format == "dot":
            return dot.emit(f"bruhat_{rs.name}", [(repr(w), repr(w)) for w in els],
                            [(repr(u), repr(v)) for u, v in covers])
        rows = [{"lower": repr(u), "upper": repr(v)} for u, v in covers]
        return ReportDocument("weyl bruhat-dot", rs.name, rows)
    _require_dot(args, f"weyl {sub}")
    if sub == "enumerate":
        els = (W.enumerate_group(args.cap) if args.max_length is None
               else W.enumerate_up_to_length(args.max_length, args.cap))
    else:
        gens = frozenset(_ints(args.gens or ""))
        for g in gens:
            if not 1 <= g <= rs.rank:
                raise WonderkitError(f"generator {g} out of range")
        if sub == "cosets":
            els = W.min_coset_reps(gens, cap=args.cap, max_length=args.max_length)
        else:
            els = W.min_double_coset_reps(gens, cap=args.cap)
    rows = [{"word": list(W.reduced_word(w)), "name": repr(w), "length": W.length(w)}
            for w in els]
    extra = {} if sub == "enumerate" else {"gens": sorted(gens)}
    return ReportDocument(f"weyl {sub}", rs.name, rows, extra=extra)


def cmd_reps(args):
    rs = _rs(args)
    lam = _weight(args, rs)
    ws = weight_system(rs, lam, args.cap)
    sub = args.command
    if sub == "poset-dot":
        covers = weight_poset(ws)
        if args.format == "dot":
            label = lambda m: ",".join(map(str, m))  # noqa: E731
            return dot.emit(f"weights_{rs.name}", [(label(m), label(m)) for m in ws.ordered_weights()],
                            [(label(a), label(b)) for a, b in covers])
        rows = [{"lower": list(a), "upper": list(b)} for a, b in covers]
        return ReportDocument("reps poset-dot", rs.name, rows, extra={"weight": list(lam)})
    _require_dot(args, f"reps {sub}")
    if sub == "weights":
        rows = [{"weight": list(m), "mult": ws.mult(m), "depth": list(ws.depth(m))}
                for m in ws.ordered_weights()]
    else:
        rows = [{"weight": list(lam), "dim_weyl": dim_weyl(rs, lam),
                 "dim_freudenthal": sum(ws.entries.values())}]
    return ReportDocument(f"reps {sub}", rs.name, rows, extra={"weight": list(lam)})


def cmd_orbits(args):
    _require_dot(args, "orbits")
    sub = args.command
    if sub == "g2-table":
        rs = build_root_system(args.type or "G2")
        if rs.name != "G2":
            raise WonderkitError("g2-table is defined for G2 only")
        rows = [c.as_row() for c in g2_table(rs)]
        return ReportDocument("orbits g2-table", rs.name, rows)
    rs = _rs(args)
    W = weyl_group(rs)
    if sub == "minuscule":
        nodes = [args.node] if args.node is not None else list(rs.nodes)
        rows = []
        for i in nodes:
            if not 1 <= i <= rs.rank:
                raise WonderkitError(f"node {i} out of range")
            for w in W.min_double_coset_reps({i}, cap=args.cap):
                rows.append(minuscule_classify(rs, i, w).as_row())
        return ReportDocument("orbits minuscule", rs.name, rows)
    pair = _ints(args.nodes or "")
    if len(pair) != 2:
        raise WonderkitError("two-root needs --nodes i,j")
    i, j = pair
    two_root_classify(rs, i, j, W.identity)  # validates the pair
    rows = [two_root_classify(rs, i, j, w).as_row()
            for w in W.min_double_coset_reps({i, j}, cap=args.cap)]
    return ReportDocument("orbits two-root", rs.name, rows)


def _piece_rows(rs, pieces):
    return [p.as_row(rs) for p in pieces]


def cmd_pieces(args):
    sub = args.command
    if sub == "i-seq":
        _require_dot(args, "pieces i-seq")
        rows, lines = [], []
        for t in _types_for(args):
            rs = build_root_system(t)
            v = i_G(rs, args.cap)
            rows.append({"type": rs.name, "i_G": v})
            lines.append(f"{rs.name}: {v}")
        return ReportDocument("pieces i-seq", args.type, rows, table_lines=lines)
    rs = _rs(args)
    if sub == "central-fiber":
        _require_dot(args, "pieces central-fiber")
        ps = central_fiber_pieces(rs, args.max_length, args.cap)
        warnings = []
        if args.only_maximal:
            ps = closure_maximal(rs, ps)
        if args.max_length is not None:
            warnings.append(f"pieces with l(w) > {args.max_length} omitted")
        return ReportDocument("pieces central-fiber", rs.name, _piece_rows(rs, ps), warnings)
    if sub == "maximal":
        _require_dot(args, "pieces maximal")
        ps = maximal_pieces(rs, args.cap)
        warnings = []
        fam, l = rs.blocks[0] if len(rs.blocks) == 1 else (None, None)
        if fam == "A" and l % 3 == 2 and l >= 5:
            warnings.append(f"closed-form census predicts {(l // 3 + 3) * (l // 3 + 2) // 2} "
                            f"maximal pieces for A{l}; enumeration finds {len(ps)}")
        return ReportDocument("pieces maximal", rs.name, _piece_rows(rs, ps), warnings)
    # closure: Hasse diagram of the closure order on all pieces
    ps = central_fiber_pieces(rs, cap=args.cap) if args.only_maximal else all_pieces(rs, args.cap)
    W = weyl_group(rs)
    name = lambda p: f"J={''.join(map(str, sorted(p.J))) or '0'}:{_word(W.reduced_word(p.w))}"  # noqa: E731
    below = {(a, b) for a in range(len(ps)) for b in range(len(ps))
             if a != b and closure_leq(rs, ps[a], ps[b])}
    covers = [(a, b) for a, b in sorted(below)
              if not any((a, c) in below and (c, b) in below for c in range(len(ps)))]
    if args.format == "dot":
        return dot.emit(f"closure_{rs.name}", [(name(p), f"{name(p)} ({p.dim})") for p in ps],
                        [(name(ps[a]), name(ps[b])) for a, b in covers])
    rows = [{"lower": name(ps[a]), "upper": name(ps[b]),
             "lower_dim": ps[a].dim, "upper_dim": ps[b].dim} for a, b in covers]
    return ReportDocument("pieces closure", rs.name, rows)


def cmd_torus(args):
    sub = args.command
    if sub == "normality":
        _require_dot(args, "torus normality")
        types = _types_for(args)
        rows = []
        for t in types:
            rs = build_root_system(t)
            if len(rs.blocks) != 1 or rs.blocks[0][0] != "A":
                raise WonderkitError("normality is checked for type A only")
            for k in rs.nodes:
                rows.append({"type": rs.name, "k": k, "height_bound": args.height_bound,
                             "normal": normality_check_A(rs.rank, k, args.height_bound)})
        return ReportDocument("torus normality", args.type, rows)
    rs = _rs(args)
    if sub == "boundary":
        _require_dot(args, "torus boundary")
        nodes = [args.node] if args.node is not None else list(rs.nodes)
        reports = [boundary_components(rs, k) for k in nodes]
        warnings = [f"k={r.k}: {r.listed_count} components listed, closed-form count "
                    f"{r.stated_count}" for r in reports if not r.consistent]
        return ReportDocument("torus boundary", rs.name, [r.as_row() for r in reports], warnings)
    lam = _weight(args, rs)
    if sub == "exponents":
        _require_dot(args, "torus exponents")
        em = exponent_matrix(rs, lam, args.cap)
        return ReportDocument("torus exponents", rs.name, em.as_rows(),
                              extra={"weight": list(lam)})
    op = torus_orbit_poset(rs, lam, args.cap)
    if args.format == "dot":
        label = lambda i: " ".join(op.surviving_monomials(i))  # noqa: E731
        return dot.emit(f"torus_orbits_{rs.name}",
                        [(f"o{i}", label(i)) for i in range(len(op.classes))],
                        [(f"o{a}", f"o{b}") for a, b in op.covers])
    rows = op.as_rows()
    return ReportDocument("torus orbit-poset-dot", rs.name, rows, extra={"weight": list(lam)})


def cmd_conjecture(args):
    _require_dot(args, "conjecture")
    if args.command == "scan":
        rs = _rs(args)
        rep = conjecture_scan(rs, args.samples, args.seed, args.cap)
        d = rep.as_dict()
        warnings = []
        if d["vanishing_character_samples"]:
            warnings.append(f"{d['vanishing_character_samples']} samples have a vanishing "
                            "fundamental character; fiber uniqueness is not asserted there")
        return ReportDocument("conjecture scan", rs.name, [d], warnings,
                              extra={"samples": args.samples, "seed": args.seed})
    from .verify import criterion_10

    res = criterion_10(seed=args.seed)
    return ReportDocument("conjecture lemmas", None, [res.as_row()],
                          extra={"seed": args.seed}), (0 if res.passed else 1)


def cmd_verify(args):
    _require_dot(args, "verify")
    from .verify import run_all

    only = sorted(set(_ints(args.only))) if args.only else None
    if only and any(n not in range(1, 13) for n in only):
        raise WonderkitError("criteria are numbered 1..12")
    results = run_all(only)
    rows = [r.as_row() for r in results]
    lines = [r.line() for r in results]
    failed = [r.number for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} criteria pass")
    doc = ReportDocument("verify", None, rows, table_lines=lines)
    return doc, (1 if failed else 0)


# -- parser ----------------------------------------------------------------------------------

GROUPS = {
    "roots": (cmd_roots, []),
    "weyl": (cmd_weyl, ["enumerate", "cosets", "double-cosets", "bruhat-dot"]),
    "reps": (cmd_reps, ["weights", "dim", "poset-dot"]),
    "orbits": (cmd_orbits, ["minuscule", "two-root", "g2-table"]),
    "pieces": (cmd_pieces, ["central-fiber", "i-seq", "maximal", "closure"]),
    "torus": (cmd_torus, ["exponents", "boundary", "normality", "orbit-poset-dot"]),
    "conjecture": (cmd_conjecture, ["scan", "lemmas"]),
    "verify": (cmd_verify, []),
}


def _common(p):
    p.add_argument("--type", help="root system, e.g. A3, B2xA1; a bare letter sweeps ranks")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--cap", type=int, default=None, help="enumeration cap (env WONDERKIT_CAP)")
    p.add_argument("--out", default=None, help="write output to FILE")
    p.add_argument("--timing", action="store_true", help="record wall time in metadata")
    p.add_argument("--weight", default=None, help="dominant weight, e.g. 1,0,1")
    p.add_argument("--node", type=int, default=None)
    p.add_argument("--nodes", default=None, help="two nodes, e.g. 1,3")
    p.add_argument("--gens", default=None, help="parabolic generators, e.g. 1,3")
    p.add_argument("--height-bound", type=int, default=8)
    p.add_argument("--only-maximal", action="store_true")
    p.add_argument("--only", default=None, help="verify: comma-separated criterion numbers")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wonderkit", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)
    for name, (_, commands) in GROUPS.items():
        gp = groups.add_parser(name)
        if commands:
            sub = gp.add_subparsers(dest="command", required=True, parser_class=_Parser)
            for c in commands:
                _common(sub.add_parser(c))
        else:
            _common(gp)
            gp.set_defaults(command=None)
    return parser


def _default_format(args) -> str:
    if args.format:
        return args.format
    return "dot" if (args.command or "").endswith("-dot") else "table"


def execute(args) -> tuple:
    """Run parsed arguments; return (output text, exit code)."""
    args.format = _default_format(args)
    handler = GROUPS[args.group][0]
    t0 = time.perf_counter()
    try:
        res = handler(args)
    except CapExceeded as exc:
        return f"wonderkit: {exc}\n", 3
    except WonderkitError as exc:
        return f"wonderkit: error: {exc}\n", 2
    code = 0
    if isinstance(res, tuple):
        res, code = res
    if isinstance(res, str):
        return res, code
    if args.timing:
        res.timing = time.perf_counter() - t0
    if args.format == "json":
        return res.to_json(), code
    if args.format == "csv":
        return res.to_csv(), code
    return res.to_table(), code


def run(argv=None) -> tuple:
    """Parse argv and execute.  Parse errors raise SystemExit(2)."""
    return execute(build_parser().parse_args(argv))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    text, code = execute(args)
    if code in (2, 3):
        sys.stderr.write(text)
    elif args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
