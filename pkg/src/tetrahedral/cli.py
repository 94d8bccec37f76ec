"""Command line interface: ``tetra classify | verify | fm``.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage
or parse errors. ``TETRA_WORKERS`` sets the size of the process pool used
by ``verify`` (default 1).
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from . import fourier_motzkin as fm
from . import tetra
from .monomial_ideal import tetra_ideal
from .s_module import ZERO, beg_end_diam, enumerate_s, hilbert_function, in_s, k_direct, module_action, witness
from .takayama import check_tetrahedral_table, delta_alpha, delta_alpha_via_localization, gate_disagreements, h1_table, scan_box

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHECKS = ("oracle", "francisco", "c5", "c8", "c9", "lemma_a1", "lemma_b1", "b2")


def _parse_tuple(text: str) -> tuple[int, ...]:
    try:
        a = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None
    if len(a) != 6 or min(a) < 0 or not any(a):
        raise argparse.ArgumentTypeError("need six nonnegative integers, not all zero")
    return a


# -- classify ----------------------------------------------------------------

def oracle_agreement(b: Sequence[int]) -> dict[str, bool]:
    table = h1_table(tetra_ideal(b))
    s = enumerate_s(b)
    degrees = table.degrees()
    cls = tetra.classify(b)
    contiguous = degrees == list(range(degrees[0], degrees[-1] + 1)) if degrees else True
    return {
        "acm": (not table) == cls.acm,
        "degree_support": degrees == list(cls.feasible_degrees) and contiguous,
        "dims_one": all(v == 1 for v in table.entries.values()),
        "s_equals_table": table.support() == set(s.points),
    }


def classify_report(a: Sequence[int], oracle: bool = False, s_points: bool = False) -> dict[str, Any]:
    cls = tetra.classify(a)
    s = enumerate_s(cls.normalized)
    report: dict[str, Any] = {
        "input": list(cls.original),
        "permutation": list(cls.permutation),
        "normalized": list(cls.normalized),
        "script_a": cls.script_a,
        "acm": cls.acm,
        "buchsbaum": cls.buchsbaum,
        "diam": cls.diam,
        "beg": cls.beg,
        "end": cls.end_,
        "k": k_direct(s),
        "hilbert": {str(d): n for d, n in hilbert_function(s).items()},
    }
    if s_points:
        report["s_points"] = [list(p) for p in s.points]
    if oracle:
        report["oracle_agreement"] = oracle_agreement(cls.normalized)
    return report


def render_text(report: dict[str, Any]) -> str:
    return "\n".join(f"{key}: {json.dumps(value)}" for key, value in report.items())


def parse_text(text: str) -> dict[str, Any]:
    out = {}
    for line in text.splitlines():
        if line.strip():
            key, value = line.split(": ", 1)
            out[key] = json.loads(value)
    return out


def cmd_classify(args) -> int:
    report = classify_report(args.curve, oracle=args.oracle, s_points=args.s_points)
    print(json.dumps(report, indent=2) if args.json else render_text(report))
    if args.oracle and not all(report["oracle_agreement"].values()):
        return EXIT_FAIL
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _check_oracle(a):
    b, _ = tetra.normalize_star(a)
    table = h1_table(tetra_ideal(b))
    fails = []
    try:
        check_tetrahedral_table(table)
    except AssertionError as exc:
        fails.append(str(exc))
    acm = tetra.is_acm(b)
    if (not table) != acm:
        fails.append(f"table empty={not table} vs is_acm={acm}")
    if not acm:
        want = list(range(tetra.script_a(b), b[0] + b[5] - 1))
        if table.degrees() != want:
            fails.append(f"degree support {table.degrees()} vs {want}")
    s = set(enumerate_s(b).points)
    if table.support() != s:
        fails.append(f"table support {sorted(table.support())} vs S {sorted(s)}")
    return fails, {"gate_disagreements": len(gate_disagreements(tetra_ideal(b)))}


def _check_francisco(a):
    if not tetra.satisfies_star(a):
        return None
    x, y = tetra.is_acm(a), tetra.is_acm_francisco(a)
    return ([f"is_acm={x} vs francisco={y}"] if x != y else []), {}


def _check_c5(a):
    b, _ = tetra.normalize_star(a)
    if tetra.is_acm(b):
        return None
    s = enumerate_s(b)
    k = k_direct(s)
    _, _, diam = beg_end_diam(s)
    formula = b[0] + b[5] - tetra.script_a(b) - 1
    fails = []
    if not k == diam == formula == tetra.diameter(b):
        fails.append(f"k_direct={k}, diam(S)={diam}, formula={formula}")
    for alpha in s.by_degree.get(tetra.script_a(b), []):
        w = witness(s, alpha)
        if w not in s or sum(w) != b[0] + b[5] - 2:
            fails.append(f"witness {w} of {alpha} not in top degree of S")
    if tetra.is_buchsbaum(b):
        if len(s.by_degree) != 1:
            fails.append("Buchsbaum but S spans several degrees")
        for alpha in s.points:
            for i in range(4):
                beta = tuple(int(j == i) for j in range(4))
                if module_action(s, alpha, beta) is not ZERO:
                    fails.append(f"x{i + 1} does not annihilate {alpha}")
    return fails, {}


def _minimal(a):
    return a[5] == max(a) and tetra.is_minimal(a)


def _check_c8(a):
    if not _minimal(a):
        return None
    fails = []
    if tetra.is_acm(a):
        fails.append("minimal curve is ACM")
    if tetra.is_buchsbaum(a) != tetra.buchsbaum_minimal_pattern(a):
        fails.append(f"is_buchsbaum={tetra.is_buchsbaum(a)} vs pattern={tetra.buchsbaum_minimal_pattern(a)}")
    return fails, {}


def _check_c9(a):
    if not _minimal(a):
        return None
    x, y = tetra.diameter(a) == 2, tetra.is_diameter_two_family(a)
    return ([f"diam==2 is {x} vs family {y}"] if x != y else []), {}


def _check_lemma_a1(a):
    ideal = tetra_ideal(a)
    lows, highs = scan_box(ideal)
    fails = []
    for alpha in itertools.product(*(range(lo, hi + 2) for lo, hi in zip(lows, highs))):
        if delta_alpha(ideal, alpha) != delta_alpha_via_localization(ideal, alpha):
            fails.append(f"degree complexes differ at {alpha}")
    return fails, {}


def _check_lemma_b1(a):
    lo, hi = max(a[1] + a[4], a[2] + a[3]), a[0] + a[5] - 2
    if lo > hi:
        return None
    fails = []
    for d in range(lo, hi + 1):
        x, y = tetra.parity_obstruction(a, d), tetra.parity_characterization(a)
        if x != y:
            fails.append(f"d={d}: floor/ceil test {x} vs parity test {y}")
    return fails, {}


def _check_b2(a):
    b, _ = tetra.normalize_star(a)
    degrees = tetra.feasible_degrees(b)
    s = enumerate_s(b)
    fails = []
    for d in range(0, b[0] + b[5] + 1):
        closed = d in degrees
        point = fm.integer_point(fm.tetra_system(b, d))
        if point is not None and not in_s(b, point):
            fails.append(f"d={d}: integer point {point} not in S")
        brute = bool(s.by_degree.get(d))
        if not closed == (point is not None) == brute:
            fails.append(f"d={d}: closed form {closed}, integer_point {point}, brute force {brute}")
    return fails, {}


_CHECK_FUNCS = {
    "oracle": _check_oracle,
    "francisco": _check_francisco,
    "c5": _check_c5,
    "c8": _check_c8,
    "c9": _check_c9,
    "lemma_a1": _check_lemma_a1,
    "lemma_b1": _check_lemma_b1,
    "b2": _check_b2,
}


def _two_clause_notes(a):
    b, _ = tetra.normalize_star(a)
    truth = tetra.is_buchsbaum(b)
    return {
        "a2_reading": tetra.buchsbaum_two_clause(b, "a2") != truth,
        "a6_reading": tetra.buchsbaum_two_clause(b, "a6") != truth,
    }


def _run_tuple(job):
    a, checks = job
    results = {}
    for name in checks:
        results[name] = _CHECK_FUNCS[name](a)
    return a, results, _two_clause_notes(a)


def sweep_tuples(max_a: int):
    return [a for a in itertools.product(range(max_a + 1), repeat=6) if any(a)]


def run_verify(max_a: int, checks: Sequence[str], workers: int = 1) -> dict[str, Any]:
    tuples = sweep_tuples(max_a)
    jobs = [(a, tuple(checks)) for a in tuples]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_tuple, jobs, chunksize=64))
    else:
        results = [_run_tuple(j) for j in jobs]
    summary: dict[str, Any] = {"max": max_a, "tuples": len(tuples), "checks": {}}
    for name in checks:
        summary["checks"][name] = {"tuples": 0, "failures": []}
    two_clause = {"a2_reading": [], "a6_reading": []}
    gate = 0
    for a, per_check, notes in results:  # already in lexicographic order
        for name, res in per_check.items():
            if res is None:
                continue
            fails, extra = res
            entry = summary["checks"][name]
            entry["tuples"] += 1
            entry["failures"] += [{"tuple": list(a), "detail": f} for f in fails]
            gate += extra.get("gate_disagreements", 0)
        for reading, differs in notes.items():
            if differs:
                two_clause[reading].append(list(a))
    summary["buchsbaum_two_clause_disagreements"] = {k: {"count": len(v), "first": v[:5]} for k, v in two_clause.items()}
    if "oracle" in checks:
        summary["gate_disagreements"] = gate
    summary["passed"] = all(not c["failures"] for c in summary["checks"].values())
    return summary


def _render_verify(summary: dict[str, Any]) -> str:
    lines = [f"verify: {summary['tuples']} tuples with 0 <= a_i <= {summary['max']}"]
    for name, entry in summary["checks"].items():
        status = "PASS" if not entry["failures"] else "FAIL"
        lines.append(f"  {name:<10} {status}  ({entry['tuples']} tuples checked)")
        for f in entry["failures"][:20]:
            lines.append(f"    {tuple(f['tuple'])}: {f['detail']}")
    for reading, info in summary["buchsbaum_two_clause_disagreements"].items():
        lines.append(
            f"  two-clause Buchsbaum criterion, {reading}: {info['count']} disagreements"
            + (f" e.g. {[tuple(t) for t in info['first']]}" if info["count"] else "")
        )
    if "gate_disagreements" in summary:
        lines.append(f"  support-gate readings disagree at {summary['gate_disagreements']} multidegrees")
    lines.append("PASS" if summary["passed"] else "FAIL")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    checks = [c for c in CHECKS if getattr(args, c)] or list(CHECKS)
    workers = int(os.environ.get("TETRA_WORKERS", "1") or 1)
    summary = run_verify(args.max, checks, workers)
    print(json.dumps(summary, indent=2) if args.json else _render_verify(summary))
    return EXIT_OK if summary["passed"] else EXIT_FAIL


# -- fm ----------------------------------------------------------------------

def cmd_fm(args) -> int:
    try:
        with open(args.file) as fh:
            system = fm.parse_system(fh.read())
    except fm.FormatError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"{args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    original = system
    current = fm.normalize(system)
    for var in filter(None, (args.eliminate or "").split(",")):
        if var not in current.variables:
            print(f"unknown variable {var!r}", file=sys.stderr)
            return EXIT_USAGE
        current = fm.remove_redundant(fm.eliminate(current, var))
    result: dict[str, Any] = {
        "variables": list(current.variables),
        "constraints": [str(c) for c in current.constraints],
        "feasible": fm.is_feasible_rational(original),
    }
    if args.int:
        try:
            point = fm.integer_point(original)
        except fm.UnsupportedInputError as exc:
            print(f"cannot search for an integer point: {exc}", file=sys.stderr)
            return EXIT_USAGE
        result["integer_point"] = None if point is None else list(point)
    if args.json:
        print(json.dumps(result, indent=2))
        return EXIT_OK
    print("variables: " + " ".join(result["variables"]))
    for line in result["constraints"]:
        print("  " + line)
    print(f"feasible: {'yes' if result['feasible'] else 'no'}")
    if args.int:
        p = result["integer_point"]
        print("integer point: " + ("infeasible" if p is None else " ".join(map(str, p))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tetra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one curve")
    p.add_argument("curve", type=_parse_tuple, metavar="a1,..,a6")
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--s-points", action="store_true", help="list the lattice points of S")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="exhaustive cross-verification sweeps")
    p.add_argument("--max", type=int, default=3, help="sweep 0 <= a_i <= MAX (default 3)")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--francisco", action="store_true")
    p.add_argument("--c5", action="store_true", help="k = diam = a1+a6-A-1 and the witness points")
    p.add_argument("--c8", action="store_true", help="minimal curves: never ACM, Buchsbaum patterns")
    p.add_argument("--c9", action="store_true", help="minimal curves of diameter two")
    p.add_argument("--lemma-a1", dest="lemma_a1", action="store_true", help="degree complex two ways")
    p.add_argument("--lemma-b1", dest="lemma_b1", action="store_true", help="floor/ceil vs parity test")
    p.add_argument("--b2", action="store_true", help="feasible degrees three ways")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fm", help="Fourier-Motzkin elimination on a constraint file")
    p.add_argument("file")
    p.add_argument("--eliminate", metavar="V1,V2,...")
    p.add_argument("--int", action="store_true", help="also search for an integer point")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fm)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.max < 1:
        parser.error("--max must be at least 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
