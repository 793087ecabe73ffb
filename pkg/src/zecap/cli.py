"""Command-line front end.

Exit status is 0 on success, 1 when the input is invalid and 2 when a
verification fails (a code that is not a code, a search result that
contradicts a cached baseline, a generator set that is not uniquely
decodable).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import Any, Sequence

from zecap import construct, oracle
from zecap.channel import (
    ChannelGraph,
    CodeSet,
    classify_interchangeable,
    enumerate_one_edge_graphs,
    first_violation,
    load_graph,
    read_words,
    single_edge,
)
from zecap.words import format_word, parse_word

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


class InputError(Exception):
    pass


def fmt_float(x: float) -> str:
    return format(Decimal(x).quantize(Decimal("1e-9"), rounding=ROUND_HALF_EVEN), "f")


def _plain(obj: Any) -> Any:
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def symbolic_rate(exponents: Sequence[int]) -> str:
    exps = tuple(sorted(exponents))
    if len(set(exps)) == 1:
        return f"log{len(exps)}/{exps[0]}" if len(exps) > 2 else f"1/{exps[0]}"
    return {(1, 3): "-log alpha", (2, 3): "-log beta"}.get(exps, "")


def _parse_cli_word(text: str, q: int | None, what: str):
    try:
        return parse_word(text, q)
    except ValueError as exc:
        raise InputError(f"malformed word for {what}: {exc}") from None


def _edge_args(args) -> tuple:
    u = _parse_cli_word(args.u, args.q, "--u")
    v = _parse_cli_word(args.v, args.q, "--v")
    if len(u) != len(v) or not u:
        raise InputError(f"--u and --v must be non-empty and of equal length, got {args.u!r} and {args.v!r}")
    if u == v:
        raise InputError("--u and --v must differ")
    q = args.q if args.q is not None else max(2, 1 + max(u + v))
    return u, v, q


def _load_graph(path: str) -> ChannelGraph:
    try:
        return load_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"graph file {path} is not valid JSON: {exc}") from None
    except ValueError as exc:
        raise InputError(f"invalid graph in {path}: {exc}") from None


def _read_words(path: str, q: int | None) -> list:
    try:
        return read_words(path, q)
    except OSError as exc:
        raise InputError(f"cannot read word file {path}: {exc.strerror or exc}") from None
    except ValueError as exc:
        raise InputError(f"malformed word file: {exc}") from None


# --- verbs -----------------------------------------------------------------


def cmd_bound(args):
    u, v, q = _edge_args(args)
    cp = construct.best_core_pair(u, v)
    bound = construct.characteristic_root(cp.lengths)
    exact = construct.capacity_if_uniform(u, v)
    record = {
        "u": format_word(u),
        "v": format_word(v),
        "q": q,
        "m": len(u) - 1,
        "reversed": cp.reversed,
        "pre": format_word(cp.pre),
        "u_v": format_word(cp.u_v),
        "v_u": format_word(cp.v_u),
        "len_u_v": len(cp.u_v),
        "len_v_u": len(cp.v_u),
        "root": bound.root,
        "rate_bits": bound.rate,
        "rate_symbol": symbolic_rate(bound.exponents),
        "status": (exact or bound).status.value,
    }
    return EXIT_OK, record, None


def cmd_classify(args):
    if args.q < 2 or args.m < 0:
        raise InputError("classify needs --q >= 2 and --m >= 0")
    if args.q ** (args.m + 1) > 4096:
        raise InputError("too many vertices to enumerate; keep q^(m+1) <= 4096")
    classes = classify_interchangeable(enumerate_one_edge_graphs(args.q, args.m))
    rows = []
    for i, c in enumerate(classes, 1):
        (a, b), = c.canonical.edges
        rows.append(
            {
                "class": i,
                "canonical": f"{format_word(a)}-{format_word(b)}",
                "size": len(c),
                "members": " ".join(
                    f"{format_word(x)}-{format_word(y)}" for g in c.members for x, y in g.sorted_edges
                ),
            }
        )
    record = {"q": args.q, "m": args.m, "graphs": sum(len(c) for c in classes), "classes": len(classes), "rows": rows}
    return EXIT_OK, record, rows


def cmd_construct(args):
    u, v, q = _edge_args(args)
    if args.n < 0:
        raise InputError("--n must be non-negative")
    code = construct.build_quasi_code(u, v, args.n)
    g = single_edge(u, v, q=q)
    bad = first_violation(code.words, g)
    record = {
        "u": format_word(u),
        "v": format_word(v),
        "n": args.n,
        "length": code.n,
        "size": len(code),
        "valid": bad is None,
    }
    if bad is not None:
        record["violating_pair"] = [format_word(bad[0]), format_word(bad[1])]
    if args.out:
        header = f"# quasi 2-code for G({format_word(u)},{format_word(v)}), body length {args.n}\n"
        Path(args.out).write_text(header + code.to_text())
        record["out"] = args.out
    else:
        record["words"] = [format_word(w) for w in code.sorted()]
    return (EXIT_OK if bad is None else EXIT_FAILED), record, None


def cmd_search(args):
    g = _load_graph(args.graph)
    if args.n < 1:
        raise InputError("--n must be at least 1")
    res = oracle.max_code_exact(g, args.n, budget=args.budget)
    record = {"graph": g.to_json(), **res.as_dict()}
    code = EXIT_OK
    if args.cache and res.status == "EXACT":
        tables = oracle.load_size_tables(args.cache)
        key = oracle.graph_key(g)
        cached = tables.get(key, {}).get(args.n)
        if cached is not None and cached != res.max_size:
            record["cache_mismatch"] = {"cached": cached, "computed": res.max_size}
            code = EXIT_FAILED
        else:
            tables.setdefault(key, {})[args.n] = res.max_size
            oracle.save_size_tables(tables, args.cache)
    return code, record, None


def cmd_verify(args):
    g = _load_graph(args.graph)
    words = _read_words(args.code, g.q)
    if not words:
        raise InputError(f"code file {args.code} contains no words")
    try:
        code = CodeSet.of(words)
    except ValueError as exc:
        raise InputError(f"code file {args.code}: {exc}") from None
    bad = first_violation(code.words, g)
    record = {"graph": g.to_json(), "n": code.n, "size": len(code), "valid": bad is None}
    if bad is not None:
        record["violating_pair"] = [format_word(bad[0]), format_word(bad[1])]
    return (EXIT_OK if bad is None else EXIT_FAILED), record, None


def cmd_rate(args):
    words = _read_words(args.generators, args.q)
    if not words:
        raise InputError(f"generator file {args.generators} contains no words")
    if any(len(w) == 0 for w in words):
        raise InputError("generators must be non-empty")
    gens = construct.GeneratorSet.of(words)
    ud = construct.is_uniquely_decodable(gens)
    try:
        bound = construct.characteristic_root(gens.lengths)
    except construct.DegenerateRate as exc:
        raise InputError(str(exc)) from None
    record = {
        "generators": len(gens),
        "lengths": list(gens.lengths),
        "uniquely_decodable": ud,
        "root": bound.root,
        "rate_bits": bound.rate,
        "rate_symbol": symbolic_rate(bound.exponents),
    }
    return (EXIT_OK if ud else EXIT_FAILED), record, None


def cmd_table1(args):
    rows = construct.table1_binary_m2()
    flat = []
    for r in rows:
        d = r.as_dict()
        cap = (
            f"[{fmt_float(r.capacity.low)}, {fmt_float(r.capacity.high)}]"
            if r.capacity.is_interval
            else fmt_float(r.capacity.low)
        )
        flat.append(
            {
                "case": d["case"],
                "members": " ".join(d["members"]),
                "canonical": d["canonical"],
                "len_u_v": d["len_u_v"],
                "len_v_u": d["len_v_u"],
                "bound_bits": d["bound_bits"],
                "capacity_bits": cap,
                "capacity_symbol": d["capacity_symbol"],
                "status": d["status"],
                "note": d["note"],
            }
        )
    record = {"rows": [r.as_dict() for r in rows]}
    return EXIT_OK, record, flat


# --- output ----------------------------------------------------------------


def _scalar_row(record: dict) -> dict:
    return {k: (json.dumps(_plain(v)) if isinstance(v, (dict, list)) else v) for k, v in record.items()}


def render(record: dict, rows: list[dict] | None, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_plain(record), indent=2, sort_keys=False) + "\n"
    table = [_plain(r) for r in rows] if rows is not None else [_scalar_row(_plain(record))]
    if not table:
        return ""
    cols = list(table[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(table)
        return buf.getvalue()
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for r in table:
        lines.append("| " + " | ".join(str(r[c]).replace("|", "\\|") for c in cols) + " |")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zecap", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    sub = p.add_subparsers(dest="verb", required=True)

    def edge(sp):
        sp.add_argument("--u", required=True, help="first edge endpoint, e.g. 000")
        sp.add_argument("--v", required=True, help="second edge endpoint, e.g. 001")
        sp.add_argument("--q", type=int, default=None, help="alphabet size (default: inferred)")

    sp = sub.add_parser("bound", help="core pair and quasi 2-code rate for G(u,v)")
    edge(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("classify", help="interchangeability classes of one-edge graphs")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("construct", help="emit and self-check the quasi 2-code")
    edge(sp)
    sp.add_argument("--n", type=int, required=True, help="body length before the common-prefix suffix")
    sp.add_argument("--out", help="write codewords to this file")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("search", help="exact largest code of length n")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="search node cap")
    sp.add_argument("--cache", help="JSON file of baseline sizes to check against and extend")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="check that a word file is a code for a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--code", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("rate", help="unique decodability and rate of a generator set")
    sp.add_argument("--generators", required=True)
    sp.add_argument("--q", type=int, default=None)
    sp.set_defaults(func=cmd_rate)

    sp = sub.add_parser("table1", help="binary two-memory one-edge graphs: classes, bounds, capacities")
    sp.set_defaults(func=cmd_table1)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, record, rows = args.func(args)
    except InputError as exc:
        print(f"zecap {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(render(record, rows, args.format))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
