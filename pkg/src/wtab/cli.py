"""Command line front end: ``wtab <subcommand> ...``.

Exit codes: 0 success, 1 predicate false, 2 usage or unreadable input,
3 domain error (bad partition, undefined operation and so on).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import oracle
from .barbasch_vogan import ZERO_RULES, bv
from .classifier import (
    CentralCharacter,
    classify,
    enumerate_tables,
    primitive_ideal_labels,
)
from .component_group import orbit
from .core import (
    HalfInt,
    LieType,
    Partition,
    STable,
    Table,
    Word,
    format_value,
    sort_rows,
    weight_of,
)
from .errors import ParseError, WtabError
from .rowops import (
    find_column_strict,
    find_column_strict_sym,
    is_column_strict,
    is_jrecs,
    search_column_strict,
    swap_rows,
    swap_rows_sym,
)
from .schensted import rs

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


# ----------------------------------------------------------------- parsing


def _entry(x, where):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"entry {x!r} must be an integer or a 'k/2' string", *where)
    if isinstance(x, int):
        return 2 * x
    if isinstance(x, str):
        try:
            return HalfInt.parse(x).twice_value
        except ValueError:
            raise ParseError(f"cannot read entry {x!r}", *where) from None
    raise ParseError(f"entry {x!r} must be an integer or a 'k/2' string", *where)


def _build(rows2, offsets, kind, where=(None, None)):
    """Construct the table, turning validation errors into ParseErrors."""
    try:
        if kind is None:
            if offsets is None:
                offsets = (0,) * len(rows2)
            return Table(rows2, tuple(offsets))
        return STable(rows2, offsets, kind)
    except WtabError as exc:
        tag = "parity" if "half-integ" in str(exc) or "parity" in str(exc) else "invalid table"
        raise ParseError(f"{tag}: {exc}", *where) from exc


def _parse_json(obj, where=(None, None)) -> Table:
    if not isinstance(obj, dict):
        raise ParseError("a table must be a JSON object", *where)
    rows = obj.get("rows")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("'rows' must be a list of lists", *where)
    rows2 = tuple(tuple(_entry(x, where) for x in r) for r in rows)
    kind = obj.get("type")
    if kind is not None:
        try:
            kind = LieType.of(kind)
        except ValueError:
            raise ParseError(f"unknown type {kind!r}", *where) from None
    offsets = obj.get("offsets")
    if offsets is not None:
        if not isinstance(offsets, list) or not all(
                isinstance(o, int) and not isinstance(o, bool) for o in offsets):
            raise ParseError("'offsets' must be a list of integers", *where)
    A = _build(rows2, offsets, kind, where)
    if "partition" in obj:
        try:
            p = Partition(tuple(int(x) for x in obj["partition"]))
        except (TypeError, ValueError):
            raise ParseError("'partition' must be a list of positive integers", *where) from None
        if p != A.part:
            raise ParseError(f"rows have shape {A.part} but partition says {p}", *where)
    return A


def _parse_grid(text: str, kind=None) -> Table:
    rows2, rel, origin = [], [], None
    for ln, line in enumerate(text.splitlines(), start=1):
        toks, pos = [], 0
        for tok in line.split():
            pos = line.index(tok, pos)
            toks.append((tok, pos + 1))
            pos += len(tok)
        if not toks:
            continue
        if toks[0][0] == "type" and len(toks) == 2:
            try:
                kind = LieType.of(toks[1][0])
            except ValueError:
                raise ParseError(f"unknown type {toks[1][0]!r}", ln, toks[1][1]) from None
            continue
        dots = 0
        while dots < len(toks) and toks[dots][0] == ".":
            dots += 1
        body = toks[dots:]
        if len(body) == 1 and body[0][0] == "+":
            origin = dots
            continue
        if not body:
            raise ParseError("row has no entries", ln, toks[-1][1])
        vals = []
        for tok, col in body:
            try:
                vals.append(HalfInt.parse(tok).twice_value)
            except ValueError:
                raise ParseError(f"cannot read entry {tok!r}", ln, col) from None
        rows2.append(tuple(vals))
        rel.append(dots)
    if not rows2:
        raise ParseError("no rows found", 1, 1)
    if origin is not None:
        offsets = tuple(d - origin for d in rel)
    elif kind is not None:
        # central symmetry pins the shift
        shift = -(rel[0] + rel[-1] + 2 * len(rows2[0]))
        if shift % 2:
            raise ParseError("rows are not centrally symmetric", 1, 1)
        offsets = tuple(d + shift // 2 for d in rel)
    else:
        offsets = tuple(rel)
    return _build(tuple(rows2), offsets, kind)


def parse_table(text: str, kind=None) -> Table:
    """Read a table from JSON or from an ASCII grid.

    JSON objects carrying ``"type"`` give an :class:`STable`; without it
    the rows form a plain :class:`Table` (left-justified unless offsets
    are given).  ``kind`` sets the type for grids without a header line.
    """
    s = text.strip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        return _parse_json(obj)
    return _parse_grid(text, None if kind is None else LieType.of(kind))


def parse_word(text: str) -> Word:
    """Comma separated entries; ``z+`` and ``z-`` mark the D zero pair."""
    vals, plus, minus = [], None, None
    for pos, tok in enumerate(t.strip() for t in text.split(",") if t.strip()):
        if tok == "z+":
            plus = pos
            vals.append(0)
        elif tok == "z-":
            minus = pos
            vals.append(0)
        else:
            try:
                vals.append(HalfInt.parse(tok).value)
            except ValueError:
                raise ParseError(f"cannot read entry {tok!r}", 1, pos + 1) from None
    if (plus is None) != (minus is None) or (plus is not None and plus > minus):
        raise ParseError("use z+ then z- exactly once each", 1, 1)
    tb = None if plus is None else (plus, minus)
    try:
        return Word(vals, tb)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def _parse_list(text: str, what: str):
    try:
        return [HalfInt.parse(t).value for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"cannot read {what} {text!r}") from None


def _parse_partition(text: str) -> Partition:
    try:
        parts = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ParseError(f"cannot read partition {text!r}") from None
    if not parts or min(parts) <= 0:
        raise ParseError("a partition needs positive parts")
    return Partition(parts)


# ---------------------------------------------------------------- printing


def _json_value(t: int):
    return t // 2 if t % 2 == 0 else format_value(HalfInt(t))


def table_to_json(A: Table) -> dict:
    obj = {}
    if isinstance(A, STable):
        obj["type"] = A.kind.value
        obj["partition"] = list(A.part.parts)
    obj["rows"] = [[_json_value(x) for x in row] for row in A.twice_rows]
    default = (tuple(-len(r) for r in A.twice_rows) if isinstance(A, STable)
               else (0,) * len(A.twice_rows))
    if A.offsets != default:
        obj["offsets"] = list(A.offsets)
    return obj


_CELL = 3  # characters per half box


def format_table(A: Table, style: str = "json") -> str:
    """``json``: one canonical line.  ``grid``: boxes drawn on a half-box
    grid, ``.`` padding on the left; s-tables get a ``+`` line marking the
    centre between the two middle rows."""
    if style == "json":
        return json.dumps(table_to_json(A))
    if style != "grid":
        raise ValueError(f"unknown style {style!r}")
    lo = min(A.offsets + ((0,) if isinstance(A, STable) else ()))
    width = max(len(format_value(HalfInt(x))) for row in A.twice_rows for x in row)
    width = max(width, 2 * _CELL - 1)
    dot = "." + " " * (_CELL - 1)

    def line(o, cells):
        pad = dot * (o - lo)
        return (pad + " ".join(c.rjust(width) for c in cells)).rstrip()

    out = []
    if isinstance(A, STable):
        out.append(f"type {A.kind.value}")
    for t, (o, row) in enumerate(zip(A.offsets, A.twice_rows)):
        if isinstance(A, STable) and t == A.r:
            out.append((dot * (0 - lo) + "+").rstrip())
        out.append(line(o, [format_value(HalfInt(x)) for x in row]))
    return "\n".join(out)


# ---------------------------------------------------------------- commands


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _table_arg(args) -> Table:
    if args.table is None:
        raise ParseError("--table FILE is required")
    A = parse_table(_read(args.table), args.type)
    if args.type is not None and isinstance(A, STable) and A.kind is not LieType.of(args.type):
        A = STable(A.twice_rows, A.offsets, args.type)
    return A


def _stable_arg(args) -> STable:
    A = _table_arg(args)
    if not isinstance(A, STable):
        raise ParseError("this command needs an s-table (give \"type\" in the JSON)")
    return A


def cmd_rs(args):
    w = parse_word(args.word)
    T = rs(w)
    print(T)
    print(f"shape: {T.shape}")
    return EXIT_OK


def cmd_bv(args):
    if args.weight is not None:
        lam = _parse_list(args.weight, "weight")
        lt = LieType.of(args.type or "C")
    else:
        A = _stable_arg(args)
        lam, lt = weight_of(A), A.kind
        print(f"weight: {lam}")
    q, trace = bv(lam, lt, args.zero_rule)
    if args.trace:
        for ln in trace.lines():
            print(ln)
    else:
        print(q)
    return EXIT_OK


def cmd_swap(args):
    A = sort_rows(_table_arg(args))
    if isinstance(A, STable):
        B = swap_rows_sym(A, args.row)
    else:
        B = swap_rows(A, args.row)
    if B is None:
        print("undefined")
        return EXIT_FALSE
    print(format_table(B, args.style))
    return EXIT_OK


def cmd_colstrict(args):
    A = _table_arg(args)
    if args.exact:
        ok = is_column_strict(A, args.mode)
        print("column strict" if ok else "not column strict")
        return EXIT_OK if ok else EXIT_FALSE
    if isinstance(A, STable) and len({len(r) % 2 for r in A.twice_rows}) > 1:
        ok = is_jrecs(A)
        print("jrecs" if ok else "not jrecs")
        return EXIT_OK if ok else EXIT_FALSE
    if not A.frame.is_convex:
        B = search_column_strict(A)
    elif isinstance(A, STable):
        B = find_column_strict_sym(A)
    else:
        B = find_column_strict(A)
    if B is None:
        print("no column strict member")
        return EXIT_FALSE
    print(format_table(B, args.style))
    return EXIT_OK


def cmd_orbit(args):
    A = _stable_arg(args)
    elems, fails = orbit(A, with_failures=True)
    for e in elems:
        rec = {
            "table": table_to_json(e.table),
            "parities": sorted("odd" if p else "even" for p in e.parities),
            "words": {("odd" if p else "even"): list(w) for p, w in sorted(e.words.items())},
        }
        print(json.dumps(rec))
    for f in fails:
        print(json.dumps({"failure": table_to_json(f.table), "generator": f.generator,
                          "reason": f.reason}))
    return EXIT_OK


def _classify_one(A, p, lt):
    res = classify(A, p, lt)
    return res, res.record(A)


def cmd_classify(args):
    lt = LieType.of(args.type or "C")
    if args.jsonl:
        text = _read(args.table)
        for ln, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                A = _parse_json(json.loads(line), (ln, None))
                if not isinstance(A, STable):
                    A = STable(A.twice_rows, None, lt)
                p = _parse_partition(args.partition) if args.partition else A.part
                rec = _classify_one(A, p, lt)[1]
            except json.JSONDecodeError as exc:
                rec = {"line": ln, "error": f"ParseError: {exc.msg}"}
            except WtabError as exc:
                rec = {"line": ln, "error": f"{type(exc).__name__}: {exc}"}
            print(json.dumps(rec))
        return EXIT_OK
    A = _stable_arg(args)
    p = _parse_partition(args.partition) if args.partition else A.part
    res, rec = _classify_one(A, p, lt)
    print(json.dumps(rec))
    return EXIT_OK if res.finite_dimensional else EXIT_FALSE


def cmd_enumerate(args):
    lt = LieType.of(args.type or "C")
    if args.partition is None or args.entries is None:
        raise ParseError("--partition and --entries are required")
    p = _parse_partition(args.partition)
    chi = CentralCharacter.of(_parse_list(args.entries, "entries"))
    if args.prim_ideals:
        for lab in primitive_ideal_labels(p, chi, lt):
            rec = {"table": table_to_json(lab.table), "tags": [lab.tag]}
            print(json.dumps(rec))
        return EXIT_OK
    for A in enumerate_tables(p, chi, lt):
        res, rec = _classify_one(A, p, lt)
        if args.only_finite and not res.finite_dimensional:
            continue
        rec["table"] = table_to_json(A)
        rec["tags"] = ["pyr_c"] if is_jrecs(A) else []
        print(json.dumps(rec))
    return EXIT_OK


def cmd_oracle(args):
    what = args.what
    if what == "shape":
        print(oracle.brute_shape(parse_word(args.arg)))
    elif what == "sharp":
        v = oracle.brute_sharp(_parse_list(args.arg, "list"))
        print("undefined" if v is None else format_value(v))
        return EXIT_OK if v is not None else EXIT_FALSE
    elif what == "recs":
        A = _table_arg(args)
        ok = oracle.brute_recs(A)
        print("row equivalent to column strict" if ok else "not row equivalent to column strict")
        return EXIT_OK if ok else EXIT_FALSE
    elif what == "bv":
        print(oracle.bv_with_step2a(_parse_list(args.arg, "weight"), args.type or "C"))
    elif what == "selftest":
        return _selftest(args.seed, args.count)
    return EXIT_OK


def _selftest(seed, count):
    """Random cross-checks of production code against the oracles."""
    from .barbasch_vogan import bv_partition
    from .component_group import sharp_element
    from .schensted import rs_shape

    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        w = [rng.randint(-3, 3) for _ in range(rng.randint(0, 8))]
        if rs_shape(w) != oracle.brute_shape(w):
            bad += 1
            print(f"rs mismatch: {w}")
        vals = [rng.randint(-5, 5) for _ in range(rng.randint(1, 6))]
        if sharp_element(vals) != oracle.brute_sharp(vals):
            bad += 1
            print(f"sharp mismatch: {vals}")
        lt = rng.choice("CD")
        lam = [rng.randint(-4, 4) for _ in range(rng.randint(1, 4))]
        if bv_partition(lam, lt) != oracle.bv_with_step2a(lam, lt):
            bad += 1
            print(f"bv mismatch: {lt} {lam}")
    print(f"{3 * count} checks, {bad} mismatches (seed {seed})")
    return EXIT_OK if bad == 0 else EXIT_FALSE


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _Usage()


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", choices=["C", "D"])
    common.add_argument("--table", metavar="FILE", help="table as JSON or grid ('-' for stdin)")
    common.add_argument("--style", choices=["json", "grid"], default="json")
    common.add_argument("--seed", type=int, default=0)

    ap = _Parser(prog="wtab", description="Weight tables for types C and D.")
    sub = ap.add_subparsers(dest="cmd", parser_class=_Parser)

    p = sub.add_parser("rs", parents=[common], help="insertion tableau of a word")
    p.add_argument("word", help="e.g. 4,1,2,5,6,3 or 1,z+,z-,-1")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("bv", parents=[common], help="associated variety partition")
    p.add_argument("--weight", help="a_1,...,a_n")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--zero-rule", choices=ZERO_RULES, default="middle")
    p.set_defaults(func=cmd_bv)

    p = sub.add_parser("swap", parents=[common], help="row swap s_i (s-bar_i for s-tables)")
    p.add_argument("--row", type=int, required=True)
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("colstrict", parents=[common], help="column strict member of the class")
    p.add_argument("--exact", action="store_true", help="test the table as given")
    p.add_argument("--mode", choices=["plain", "typeD_zero"], default="plain")
    p.set_defaults(func=cmd_colstrict)

    p = sub.add_parser("orbit", parents=[common], help="component group orbit")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("classify", parents=[common], help="finite dimensionality of L(A)")
    p.add_argument("--partition")
    p.add_argument("--jsonl", action="store_true", help="one table per input line")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[common], help="all tables with given entries")
    p.add_argument("--partition")
    p.add_argument("--entries")
    p.add_argument("--only-finite", action="store_true")
    p.add_argument("--prim-ideals", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", parents=[common], help="brute force cross checks")
    p.add_argument("what", choices=["shape", "sharp", "recs", "bv", "selftest"])
    p.add_argument("arg", nargs="?", default="")
    p.add_argument("--count", type=int, default=200)
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = ap.parse_args(argv)
    except _Usage:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if getattr(args, "func", None) is None:
        ap.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"wtab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"wtab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WtabError, ValueError, IndexError, NotImplementedError) as exc:
        print(f"wtab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
