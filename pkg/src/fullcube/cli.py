"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 enumeration budget exceeded or integer overflow.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from . import suites
from .binomial import ArithmeticOverflow, ubr, upper_boundary
from .cover import extremal_cover, is_edge_cover, minmax_cover_formula, minmax_lower_bound
from .hypercube import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    edge_max_bruteforce,
    edge_max_formula,
    edge_max_recurrence,
    extremal_set,
    full_vertices,
    hcr,
    phi_bruteforce,
    phi_recurrence,
    phi_table,
)
from .kruskal_katona import build_complex, is_complex, is_f_vector

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_MAX_K = 20


class UsageError(ValueError):
    pass


@dataclass
class OutputRecord:
    command: str
    params: Dict[str, Any]
    result: Any
    provenance: str
    text: List[str] = field(default_factory=list)
    ok: bool = True

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "provenance": self.provenance,
        }
        return json.dumps(body, sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        rows = self.result.get("rows") if isinstance(self.result, dict) else None
        if rows:
            header = list(rows[0])
            writer.writerow(header)
            for row in rows:
                writer.writerow([_cell(row[h]) for h in header])
        else:
            writer.writerow(["key", "value"])
            items = self.result.items() if isinstance(self.result, dict) else [("result", self.result)]
            for key, value in sorted(items):
                writer.writerow([key, _cell(value)])
        return buf.getvalue().rstrip("\n")

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return "\n".join(self.text)


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


def _cap(k: int, max_k: int) -> None:
    if k > max_k:
        raise UsageError(f"dimension {k} exceeds the cap --max-k {max_k}")


def _table_text(rows: List[dict]) -> List[str]:
    if not rows:
        return []
    header = list(rows[0])
    cells = [[_cell(r[h]) for h in header] for r in rows]
    widths = [max(len(h), *(len(c[j]) for c in cells)) for j, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return lines


# -- commands ------------------------------------------------------------------


def cmd_ubr(args) -> OutputRecord:
    rep = ubr(args.m, args.i)
    result = {"level": rep.level, "value": rep.value, "terms": [list(t) for t in rep.terms], "text": str(rep)}
    return OutputRecord("ubr", {"m": args.m, "i": args.i}, result, "formula", [str(rep)])


def cmd_boundary(args) -> OutputRecord:
    value = upper_boundary(args.m, args.i)
    return OutputRecord("boundary", {"m": args.m, "i": args.i}, {"boundary": value}, "formula", [str(value)])


def cmd_hcr(args) -> OutputRecord:
    _cap(args.k, args.max_k)
    d = hcr(args.n, args.k)
    text = [f"i={d.i} m={d.m}"]
    return OutputRecord("hcr", {"n": args.n, "k": args.k}, {"i": d.i, "m": d.m}, "formula", text)


def cmd_phi(args) -> OutputRecord:
    _cap(args.k, args.max_k)
    k = args.k
    table = phi_table(k)
    rows, ok = [], True
    for n in range(1, (1 << k) + 1):
        d = hcr(n, k)
        row = {"n": n, "phi": table[n], "hcr_i": d.i, "hcr_m": d.m}
        if args.verify:
            if args.verify == "recurrence":
                other = phi_recurrence(k, n)
            else:
                other = phi_bruteforce(k, n, budget=args.budget)
            row[args.verify] = other
            row["equal"] = other == table[n]
            ok = ok and row["equal"]
        rows.append(row)
    params = {"k": k, "verify": args.verify}
    record = OutputRecord("phi", params, {"rows": rows, "verified": ok if args.verify else None}, "formula")
    record.text = _table_text(rows)
    record.ok = ok
    return record


def cmd_extremal(args) -> OutputRecord:
    _cap(args.k, args.max_k)
    S = extremal_set(args.k, args.n)
    F = full_vertices(S)
    result = {
        "vertices": S.strings(),
        "full": F.strings(),
        "size": len(S),
        "full_count": len(F),
        "phi": phi_table(args.k)[args.n],
    }
    full = set(F)
    text = [format(v, f"0{args.k}b") + (" *" if v in full else "") for v in S]
    text.append(f"{len(S)} vertices, {len(F)} full (marked *)")
    record = OutputRecord("extremal", {"k": args.k, "n": args.n}, result, "construction", text)
    record.ok = result["full_count"] == result["phi"]
    return record


def cmd_cover(args) -> OutputRecord:
    _cap(args.k, args.max_k)
    pair = extremal_cover(args.k)
    verified = is_edge_cover(pair)
    formula = minmax_cover_formula(args.k)
    result = {
        "s1": pair.s1.strings(),
        "s2": pair.s2.strings(),
        "sizes": [len(pair.s1), len(pair.s2)],
        "verified": verified,
        "formula": formula,
    }
    ok = verified and pair.max_size == formula
    text = [f"sizes {len(pair.s1)}/{len(pair.s2)}, verified {str(verified).lower()}, formula {formula}"]
    if args.bound_check:
        bound = minmax_lower_bound(args.k)
        result["lower_bound"] = bound
        ok = ok and bound == formula
        text.append(f"lower bound {bound} {'=' if bound == formula else '!='} formula {formula}")
    record = OutputRecord("cover", {"k": args.k, "bound_check": args.bound_check}, result, "construction", text)
    record.ok = ok
    return record


def cmd_edge_max(args) -> OutputRecord:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    rows, ok = [], True
    for n in range(1, args.n + 1):
        row = {"n": n, "f": edge_max_formula(n)}
        if args.verify:
            other = edge_max_recurrence(n) if args.verify == "recurrence" else edge_max_bruteforce(n, args.budget)
            row[args.verify] = other
            row["equal"] = other == row["f"]
            ok = ok and row["equal"]
        rows.append(row)
    record = OutputRecord("edge-max", {"n": args.n, "verify": args.verify}, {"rows": rows}, "formula")
    record.text = _table_text(rows)
    record.ok = ok
    return record


def cmd_kks(args) -> OutputRecord:
    f = tuple(args.f)
    if not f or f[0] != 1:
        raise UsageError("an f-vector starts with f_-1 = 1")
    valid = is_f_vector(f)
    fam = build_complex(f)
    closed = is_complex(fam)
    faces = ["{" + ",".join(map(str, s)) + "}" for s in fam]
    result = {"f_vector": list(f), "is_f_vector": valid, "closed": closed, "faces": faces}
    text = [
        f"f-vector {' '.join(map(str, f))}: {'valid' if valid else 'not valid'}",
        f"colex family closed under subsets: {str(closed).lower()}",
        " ".join(faces),
    ]
    record = OutputRecord("kks", {"f": list(f)}, result, "construction", text)
    record.ok = valid == closed
    return record


def cmd_check(args) -> OutputRecord:
    name = args.suite
    kwargs: Dict[str, Any] = {}
    if name == "lemmas" and args.max_m is not None:
        kwargs.update(superadd_max=args.max_m, lemma1_max=args.max_m)
    elif name == "kks" and args.universe is not None:
        kwargs["universe"] = args.universe
    elif name in ("phi-oracle", "phi-recurrence", "construction", "cover-oracle", "cover-bound") and args.k is not None:
        kwargs["max_k"] = args.k
    elif name in ("edge-max", "strict", "boundary-closure", "apex") and args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if name == "phi-oracle":
        kwargs["budget"] = args.budget
    if name == "cover-oracle" and kwargs.get("max_k", 3) > 3:
        raise UsageError("cover-oracle brute force supports --k <= 3")
    res = suites.SUITES[name](**kwargs)
    report = res.to_dict()
    text = [f"{name}: {'pass' if res.passed else 'FAIL'} ({res.checked} cases, {res.failure_count} failures)"]
    text += [f"  counterexample: {c}" for c in res.failures]
    params = {"suite": name, **{k: v for k, v in sorted(kwargs.items())}}
    record = OutputRecord("check", params, report, "bruteforce", text)
    record.ok = res.passed
    return record


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output")
    g.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV output")
    g.add_argument("--text", dest="fmt", action="store_const", const="text", help="aligned text (default)")
    fmt.set_defaults(fmt="text")

    limits = argparse.ArgumentParser(add_help=False)
    limits.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max subsets a brute force may visit")
    limits.add_argument("--max-k", type=int, default=DEFAULT_MAX_K, help="dimension cap")

    parser = argparse.ArgumentParser(prog="fullcube", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ubr", parents=[fmt], help="binomial representation of m at level i")
    p.add_argument("m", type=int)
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_ubr)

    p = sub.add_parser("boundary", parents=[fmt], help="upper i-boundary of m")
    p.add_argument("m", type=int)
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("hcr", parents=[fmt, limits], help="hypercube representation of n in dimension k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_hcr)

    p = sub.add_parser("phi", parents=[fmt, limits], help="table of maximum full-vertex counts in Q_k")
    p.add_argument("k", type=int)
    p.add_argument("--verify", choices=["recurrence", "bruteforce"])
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("extremal", parents=[fmt, limits], help="an optimal n-vertex set of Q_k")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("cover", parents=[fmt, limits], help="optimal two-part induced edge cover of Q_k")
    p.add_argument("k", type=int)
    p.add_argument("--bound-check", action="store_true", help="also evaluate the lower bound")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("edge-max", parents=[fmt, limits], help="max induced edges on 1..n hypercube vertices")
    p.add_argument("n", type=int)
    p.add_argument("--verify", choices=["recurrence", "bruteforce"])
    p.set_defaults(func=cmd_edge_max)

    p = sub.add_parser("kks", parents=[fmt], help="test an f-vector and build its colex family")
    p.add_argument("f", type=int, nargs="+", help="f_-1 f_0 f_1 ...")
    p.set_defaults(func=cmd_kks)

    p = sub.add_parser("check", parents=[fmt, limits], help="run an invariant suite")
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--max-m", type=int, help="lemmas: sweep bound for m1, m2")
    p.add_argument("--universe", type=int, help="kks: ground set size")
    p.add_argument("--k", type=int, help="hypercube suites: max dimension")
    p.add_argument("--max-n", type=int, help="edge-max, strict, boundary-closure, apex: size bound")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.func(args)
    except (BudgetExceeded, ArithmeticOverflow) as exc:
        print(f"fullcube: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"fullcube: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(record.render(args.fmt))
    return EXIT_OK if record.ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
