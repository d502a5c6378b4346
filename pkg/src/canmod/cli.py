"""Command line front end: ``canmod analyze FILE...`` and ``canmod gallery``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import ringfile
from .errors import CanmodError, ParseError, PreconditionError, ResourceExceeded

EXIT_OK, EXIT_MISMATCH, EXIT_RESOURCE, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3, 4


# ---------------------------------------------------------------- expectations


def _lookup(report: dict, key: str):
    cur = report
    for part in key.split("."):
        if not isinstance(cur, dict) or part not in cur:
            raise KeyError(key)
        cur = cur[part]
    return cur


def compare_expectations(report: dict, expects: dict, ring) -> list[dict]:
    """Mismatches between a report and an ``expect`` block."""
    from .ideal import Ideal

    out = []
    for key, raw in expects.items():
        try:
            actual = _lookup(report, key)
        except KeyError:
            out.append({"key": key, "expected": raw, "actual": None})
            continue
        if isinstance(actual, list) and key == "unmixed_component":
            try:
                want = Ideal(ring, [ringfile.parse_poly(g, ring) for g in ringfile._split_gens(raw)])
                got = Ideal(ring, [ringfile.parse_poly(g, ring) for g in actual])
                ok = want == got
            except ParseError:
                ok = False
        else:
            ok = ringfile.parse_expect_value(raw) == actual
        if not ok:
            out.append({"key": key, "expected": raw, "actual": actual})
    return out


# ---------------------------------------------------------------- one file


def _read_primes(path: str, doc: ringfile.RingInput):
    """``prime`` statements from a separate file, parsed in doc's ring."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    header = ringfile._ring_decl(doc.names, doc.characteristic) + "\n"
    extra = ringfile.parse(header + text, doc.characteristic, doc.order)
    return extra.primes


def analyze_file(path: str, opts: dict) -> tuple[int, dict | None, dict | None]:
    """(exit code, report entry, diagnostic)."""
    from .classifier import classify

    try:
        doc = ringfile.read_file(path, opts.get("char"), opts.get("order"))
        if opts.get("primes"):
            doc.primes = doc.primes + _read_primes(opts["primes"], doc)
        A, primes, J = doc.build()
        named = [(name, P) for (name, _), P in zip(doc.primes, primes)]
        report = classify(A, opts["q_max"], opts["length"], primes=named or None, canonical_ideal=J)
    except OSError as exc:
        return EXIT_PARSE, None, {"file": path, "error": "io", "message": str(exc)}
    except ParseError as exc:
        return EXIT_PARSE, None, {"file": path, "error": "parse", "line": exc.line, "message": str(exc)}
    except ResourceExceeded as exc:
        return EXIT_RESOURCE, None, {"file": path, "error": "resource", "message": str(exc)}
    except PreconditionError as exc:
        return EXIT_PRECONDITION, None, {"file": path, "error": "precondition", "kind": exc.kind, "message": str(exc)}
    except CanmodError as exc:
        return EXIT_PRECONDITION, None, {"file": path, "error": "precondition", "kind": "other", "message": str(exc)}
    entry = {"file": path, "report": report}
    if doc.expects:
        bad = compare_expectations(report, doc.expects, A.S)
        if bad:
            return EXIT_MISMATCH, entry, {"file": path, "error": "expect-mismatch", "mismatches": bad}
    return EXIT_OK, entry, None


# ---------------------------------------------------------------- output


def format_text(entry: dict) -> str:
    r = entry["report"]
    yes = lambda b: "yes" if b else "no"
    lines = [f"== {entry['file']}"]
    lines.append(f"dim {r['dim']}  codim {r['codim']}  depth {r['depth']}  type {r['type']}")
    lines.append(f"Cohen-Macaulay {yes(r['is_cm'])}  Gorenstein {yes(r['is_gorenstein'])}")
    lines.append(f"unmixed component ({', '.join(r['unmixed_component'])})")
    lines.append(
        f"K_A torsionfree level {r['torsionfree_level']}  torsionless {yes(r['torsionless'])}"
        f"  reflexive {yes(r['reflexive'])}"
    )
    lines.append(
        f"generically Gorenstein {yes(r['generically_gorenstein'])}  quasi-normal {yes(r['quasi_normal'])}"
    )
    lines.append("(S_n) " + " ".join(f"{k}:{yes(v)}" for k, v in r["serre"].items()))
    lines.append("(G_n) on Supp K_A " + " ".join(f"{k}:{yes(v)}" for k, v in r["gn_on_supp_k"].items()))
    lines.append(f"q-Gorenstein level {r['q_gorenstein_level']} ({r['q_gorenstein_scope']})")
    if "canonical_ideal_colon" in r:
        lines.append(f"canonical ideal colon test: Gorenstein {yes(r['canonical_ideal_colon'])}")
    counts = {}
    for c in r["crosschecks"]:
        counts[c["status"]] = counts.get(c["status"], 0) + 1
    lines.append("cross-checks " + ", ".join(f"{v} {k}" for k, v in sorted(counts.items())))
    return "\n".join(lines)


def _run(args) -> int:
    opts = {
        "q_max": args.q_max,
        "char": args.char,
        "order": args.order,
        "length": args.length,
        "primes": args.primes,
    }
    files = args.files
    jobs = args.jobs or min(len(files), os.cpu_count() or 1)
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(analyze_file, files, [opts] * len(files)))
    else:
        results = [analyze_file(f, opts) for f in files]
    code = EXIT_OK
    for rc, entry, diag in results:
        if entry is not None:
            if args.text:
                print(format_text(entry))
            else:
                print(json.dumps(entry, sort_keys=False))
        if diag is not None:
            print(json.dumps(diag), file=sys.stderr)
        code = max(code, rc)
    return code


def _gallery(args) -> int:
    from .gallery import gallery

    entries = gallery()
    if args.write:
        os.makedirs(args.write, exist_ok=True)
        for g in entries:
            with open(os.path.join(args.write, g.name + ".ring"), "w", encoding="utf-8") as fh:
                fh.write(f"# {g.note}\n" + ringfile.format_input(g.doc))
    for g in entries:
        print(f"{g.name:28s} {g.note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="canmod", description="Canonical-module properties of S/I.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="classify rings given in .ring files")
    a.add_argument("files", nargs="+")
    a.add_argument("--q-max", type=int, default=5)
    a.add_argument("--char", type=int, default=None, help="override the coefficient field characteristic")
    a.add_argument("--order", choices=["grevlex", "lex"], default=None)
    a.add_argument("--length", type=int, default=10, help="resolution length cap")
    a.add_argument("--primes", default=None, help="file of prime statements added to every input")
    a.add_argument("--jobs", type=int, default=None)
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--text", action="store_true")
    g = sub.add_parser("gallery", help="list the built-in example rings")
    g.add_argument("--write", metavar="DIR", default=None, help="write each ring as DIR/NAME.ring")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        if args.q_max < 1 or args.length < 1:
            print(json.dumps({"error": "usage", "message": "--q-max and --length must be positive"}), file=sys.stderr)
            return EXIT_PRECONDITION
        return _run(args)
    return _gallery(args)


if __name__ == "__main__":
    sys.exit(main())
