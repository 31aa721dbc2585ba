"""Command line interface.

Exit codes: 0 Golod / success, 1 NotGolod (or a rejected witness),
2 usage or input error, 3 undetermined (``--scope ring:n`` only).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import checker, corpus, homology as hom, io
from .complex import ComplexError

EXIT_OK, EXIT_NOT_GOLOD, EXIT_ERROR, EXIT_UNDETERMINED = 0, 1, 2, 3
SCHEMA = "golod-report/1"


class UsageError(Exception):
    pass


def _verdict_exit(verdict: str) -> int:
    return {checker.GOLOD: EXIT_OK, checker.NOT_GOLOD: EXIT_NOT_GOLOD,
            checker.UNDETERMINED: EXIT_UNDETERMINED}[verdict]


def _read_input(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    K = io.loads(data.decode("utf-8", errors="replace"), path)
    return K, {"path": path, "sha256": hashlib.sha256(data).hexdigest()}


def _field(text: str) -> hom.Coefficient:
    c = hom.parse_coefficient(text if ":" in text or text in ("rat", "q") else f"f:{text}")
    if not c.is_field:
        raise UsageError(f"{text} is not a field")
    return c


def _scope(text: str):
    t = text.strip().lower()
    if t == "integral":
        return "integral", None
    kind, _, arg = t.partition(":")
    if kind == "field" and arg:
        return "field", _field(arg)
    if kind == "ring" and arg:
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"bad ring modulus {arg!r}") from None
        if n < 2:
            raise UsageError("ring modulus must be at least 2")
        return "ring", n
    raise UsageError(f"unknown scope {text!r} (integral, field:rat, field:p, ring:n)")


def _names(K, vs):
    return "{" + ",".join(K.name(v) for v in vs) + "}"


def _describe_witness(K, w) -> list[str]:
    if w is None:
        return []
    if isinstance(w, checker.NonChordalCycle):
        return [f"witness: induced cycle {' - '.join(K.name(v) for v in w.cycle)} without chord"]
    if isinstance(w, checker.BreakableNotNeighborly):
        return [f"witness: K_I with I = {_names(K, w.subset)} breaks H_2 over {w.coefficient}",
                f"         non-edge {_names(K, w.pair)}"]
    if isinstance(w, checker.NonvanishingProduct):
        return [f"witness: product m_I,J non-zero over {w.coefficient} "
                f"for I = {_names(K, w.left)}, J = {_names(K, w.right)} in degree {w.degree}"]
    return [f"witness: {w!r}"]


# subcommands ---------------------------------------------------------------

def cmd_homology(args):
    K, inp = _read_input(args.file)
    try:
        coeff = hom.parse_coefficient(args.coeff)
    except ValueError as e:
        raise UsageError(str(e)) from None
    fn = hom.cohomology if args.cohomology else hom.homology
    res = fn(K, args.degree, coeff)
    text = str(res)
    result = {"degree": args.degree, "coefficient": coeff.to_json(),
              "cohomology": bool(args.cohomology), "value": text, "homology": res.to_json()}
    return EXIT_OK, [text], inp, result


def cmd_golod(args):
    K, inp = _read_input(args.file)
    kind, arg = _scope(args.scope)
    if kind == "integral":
        rep = checker.check_golod_integral_2dim(K, args.jobs)
    elif kind == "field":
        rep = checker.check_golod_field(K, arg)
    else:
        rep = checker.check_golod_ring(K, arg, args.jobs)
    lines = [f"{rep.verdict} ({rep.scope})"] + _describe_witness(K, rep.witness)
    lines += [f"note: {n}" for n in rep.notes]
    return _verdict_exit(rep.verdict), lines, inp, rep.to_json(K)


def cmd_betti(args):
    K, inp = _read_input(args.file)
    field = _field(args.field)
    table = checker.bigraded_betti(K, field)
    lines = [f"Betti numbers over {field} (i, |I|): rank"]
    lines += [f"  ({i}, {j}): {r}" for (i, j), r in table.aggregated().items()]
    if args.full:
        lines.append("full listing (i, I): rank")
        lines += [f"  ({i}, {_names(K, I)}): {r}" for (i, I), r in table.entries.items()]
    result = table.to_json()
    if args.figure:
        from .plotting import betti_heatmap
        betti_heatmap(table, args.figure, title=f"{Path(args.file).name} over {field}")
        lines.append(f"figure written to {args.figure}")
        result["figure"] = str(args.figure)
    return EXIT_OK, lines, inp, result


def cmd_products(args):
    K, inp = _read_input(args.file)
    rep = checker.product_scan(K, _field(args.field))
    lines = [f"{rep.verdict} ({rep.scope})"] + _describe_witness(K, rep.witness)
    lines += [f"note: {n}" for n in rep.notes]
    return _verdict_exit(rep.verdict), lines, inp, rep.to_json(K)


def cmd_corpus(args):
    if args.action == "list":
        lines = [f"{n:12s} {c.description}" for n, c in corpus.CORPUS.items()]
        return EXIT_OK, lines, None, {"complexes": list(corpus.CORPUS)}
    if not args.name:
        raise UsageError("corpus emit needs a name")
    try:
        K = corpus.get(args.name)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    desc = corpus.CORPUS[args.name].description
    text = io.dumps_json(K) + "\n" if args.format == "json" else io.dumps(K, f"{args.name}: {desc}")
    return EXIT_OK, [text.rstrip("\n")], None, {"name": args.name, "m": K.m,
                                                 "facets": [list(f) for f in K.facets]}


def cmd_verify_witness(args):
    K, inp = _read_input(args.file)
    try:
        doc = json.loads(Path(args.report).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read report {args.report}: {e}") from None
    w = doc.get("result", doc).get("witness") if isinstance(doc, dict) else None
    if w is None:
        raise UsageError("report carries no witness")
    ok = checker.verify_witness(K, w)
    lines = [f"witness {w['kind']}: {'confirmed' if ok else 'REJECTED'}"]
    return (EXIT_OK if ok else EXIT_NOT_GOLOD), lines, inp, {"witness": w, "confirmed": ok}


# driver --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    common.add_argument("--report", metavar="PATH", help="also write the JSON report to PATH")

    p = argparse.ArgumentParser(prog="golod", description="Golodness of simplicial complexes")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("homology", parents=[common], help="reduced (co)homology of a complex")
    s.add_argument("file")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--coeff", default="int", help="int, rat, f:p or mod:n")
    s.add_argument("--cohomology", action="store_true")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("golod", parents=[common], help="decide Golodness")
    s.add_argument("file")
    s.add_argument("--scope", default="integral", help="integral, field:rat, field:p or ring:n")
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default $GOLOD_JOBS or 1)")
    s.set_defaults(func=cmd_golod)

    s = sub.add_parser("betti", parents=[common], help="bigraded Betti numbers")
    s.add_argument("file")
    s.add_argument("--field", default="rat", help="rat or a prime p")
    s.add_argument("--full", action="store_true", help="list every (i, I) entry")
    s.add_argument("--figure", metavar="PNG", help="write a heatmap of the table")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("products", parents=[common], help="scan products in Tor over a field")
    s.add_argument("file")
    s.add_argument("--field", default="rat")
    s.set_defaults(func=cmd_products)

    s = sub.add_parser("corpus", parents=[common], help="list or emit built-in complexes")
    s.add_argument("action", choices=["list", "emit"])
    s.add_argument("name", nargs="?")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_corpus)

    s = sub.add_parser("verify-witness", parents=[common], help="re-check a witness from a report")
    s.add_argument("file")
    s.add_argument("report")
    s.set_defaults(func=cmd_verify_witness)
    return p


def _report(argv, inp, result, code, elapsed) -> dict:
    return {"schema": SCHEMA, "command": list(argv), "input": inp, "exit_code": code,
            "result": result, "timings": {"total_seconds": round(elapsed, 6)}}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    t0 = time.perf_counter()
    try:
        code, lines, inp, result = args.func(args)
    except (UsageError, io.ParseError, ComplexError, checker.DimensionTooHigh, ValueError) as e:
        print(f"golod: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    rep = _report(argv, inp, result, code, time.perf_counter() - t0)
    doc = json.dumps(rep, indent=2, sort_keys=True)
    if args.report:
        Path(args.report).write_text(doc + "\n")
    if args.json:
        print(doc)
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
