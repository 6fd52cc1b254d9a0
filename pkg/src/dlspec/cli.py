"""Command-line front end.

Exit codes: 0 success / verdict equal, 1 verdict failure, 2 usage or parse
error, 3 domain precondition (disconnected input, family constraint),
4 incomplete corpus.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path

from .canonical import canonical_form
from .enumerate import CorpusError, enumerate_connected, stream_corpus, write_corpus
from .families import FAMILIES, FamilyConstraintError, instantiate, make_spec
from .graph import DisconnectedGraphError, GraphFormatError, from_graph6, to_graph6
from .spectra import (
    distance_laplacian,
    distance_matrix,
    exact_integer_multiplicity,
    format_groups,
    laplacian,
    numeric_spectrum,
)
from .verify import IncompleteSourceError, ThresholdError, classify, explore_open_cases, verify_theorem

EXIT_OK, EXIT_VERDICT, EXIT_USAGE, EXIT_DOMAIN, EXIT_INCOMPLETE = 0, 1, 2, 3, 4
CSV_COLUMNS = ["graph6", "n", "spectrum", "m_partial1", "m_n_exact", "case_label"]

log = logging.getLogger("dlspec")


class UsageError(Exception):
    pass


def _tolerance(args) -> float | None:
    raw = args.tol if args.tol is not None else os.environ.get("DLSPEC_TOL")
    if raw is None:
        return None
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"tolerance must be a number, got {raw!r}") from None
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    return tol


def _workers(args) -> int:
    if args.workers is None:
        return os.cpu_count() or 1
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    return args.workers


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_spectrum(args) -> int:
    g = from_graph6(args.graph6)
    builders = {"dl": distance_laplacian, "l": laplacian, "d": distance_matrix}
    m = builders[args.matrix](g)
    spec = numeric_spectrum(m, _tolerance(args))
    groups = list(spec.groups)
    if args.exact_int:
        for k, (v, mult) in enumerate(groups):
            r = round(v)
            if abs(v - r) <= 1e-6:
                groups[k] = (float(r), exact_integer_multiplicity(m, int(r)))
    text = format_groups(groups) + (" (exact)" if args.exact_int else "")
    if args.format == "json":
        text = json.dumps({"graph6": args.graph6, "matrix": args.matrix,
                           "spectrum": [[int(round(v)) if abs(v - round(v)) <= 1e-9 else v, k] for v, k in groups],
                           "exact_int": bool(args.exact_int)})
    _emit(text, args.output)
    return EXIT_OK


def _source(args):
    if args.corpus:
        return stream_corpus(args.corpus, expect_order=args.n)
    return None


def cmd_verify(args) -> int:
    report = verify_theorem(args.theorem, args.n, source=_source(args), force=args.force,
                            workers=_workers(args))
    payload = json.dumps(report.to_dict(), indent=2, sort_keys=True)
    out = args.output or f"report_{report.theorem}_n{args.n}.json"
    Path(out).write_text(payload + "\n", encoding="utf-8")
    label = "" if report.normative else " (below threshold, non-normative)"
    print(f"{report.theorem} n={args.n}: {report.verdict}{label}; scanned {report.scanned}, "
          f"satisfying {len(report.enumerated_satisfying)}, predicted {len(report.predicted)}; report {out}")
    for c in report.counterexamples:
        print(f"  {c['kind']}: {c['graph6']}  [{format_groups(c['spectrum'])}]")
    return EXIT_OK if report.verdict == "equal" else EXIT_VERDICT


def _parse_parts(text):
    if text is None:
        return None
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--parts must be comma-separated integers, got {text!r}") from None


def cmd_family(args) -> int:
    try:
        spec = make_spec(args.id, args.n, parts=_parse_parts(args.parts), alpha=args.alpha, omega=args.omega)
    except KeyError as e:
        raise UsageError(str(e.args[0])) from None
    g = instantiate(spec)
    _emit(canonical_form(g), args.output)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    stream = enumerate_connected(args.n)
    if args.output:
        count = write_corpus(stream, args.output)
        print(f"wrote {count} graphs to {args.output}", file=sys.stderr)
    else:
        for g in stream:
            sys.stdout.write(to_graph6(g) + "\n")
    return EXIT_OK


def _rows(pairs):
    for g, p in pairs:
        yield {
            "graph6": canonical_form(g),
            "n": p.order,
            "spectrum": str(p.spectrum),
            "m_partial1": p.m_partial1,
            "m_n_exact": p.m_n_exact,
            "case_label": p.case_label or "",
        }


def _render(rows, fmt, extra=None) -> str:
    rows = list(rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        return json.dumps({**(extra or {}), "graphs": rows}, indent=2)
    return "\n".join(f"{r['graph6']}\t{r['spectrum']}\t{r['case_label'] or '-'}" for r in rows)


def cmd_explore_open(args) -> int:
    found = explore_open_cases(args.n, source=_source(args), workers=_workers(args))
    text = _render(_rows(found), args.format or "json", {"n": args.n, "count": len(found)})
    _emit(text, args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.graph6:
        graphs = [from_graph6(s) for s in args.graph6]
    elif args.corpus:
        graphs = list(stream_corpus(args.corpus))
    else:
        raise UsageError("classify needs --graph6 or --corpus")
    tol = _tolerance(args)
    _emit(_render(_rows((g, classify(g, tol)) for g in graphs), args.format or "csv"), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=str, default=None, help="grouping tolerance (overrides DLSPEC_TOL)")
    common.add_argument("--workers", type=int, default=None, help="worker processes (default: cores)")
    common.add_argument("--format", choices=["json", "csv", "plain"], default=None)
    common.add_argument("-o", "--output", default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="dlspec", description="Distance Laplacian spectra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", parents=[common], help="grouped spectrum of one graph")
    s.add_argument("--graph6", required=True)
    s.add_argument("--matrix", choices=["dl", "l", "d"], default="dl")
    s.add_argument("--exact-int", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("verify", parents=[common], help="exhaustively check a theorem at order n")
    s.add_argument("--theorem", required=True, type=str.lower,
                   choices=["t31a", "t31b", "t41", "t42a", "t42b", "t42c"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--corpus", default=None, help="graph6 file of all connected graphs of order n")
    s.add_argument("--force", action="store_true", help="allow orders below the theorem threshold")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("family", parents=[common], help="canonical graph6 of a named family")
    s.add_argument("--id", required=True, help="family id, e.g. F12 or F6:K_pp1_plus_e; one of "
                   + ", ".join(k.split(":")[0] for k in FAMILIES))
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--parts", default=None, help="part sizes for F1, e.g. 2,2,1,1")
    s.add_argument("--alpha", type=int, default=None)
    s.add_argument("--omega", type=int, default=None)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("enumerate", parents=[common], help="all connected graphs of order n as graph6")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("explore-open", parents=[common], help="list graphs in the open cases (c) and (d)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--corpus", default=None)
    s.set_defaults(func=cmd_explore_open)

    s = sub.add_parser("classify", parents=[common], help="multiplicity profile of graphs")
    s.add_argument("--graph6", nargs="+", default=None)
    s.add_argument("--corpus", default=None)
    s.set_defaults(func=cmd_classify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ThresholdError, GraphFormatError, CorpusError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DisconnectedGraphError, FamilyConstraintError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except IncompleteSourceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
