"""Command-line interface: ``vlattice {analyze,oracle-check,classify,pl-demo}``.

Exit codes: 0 success, 1 oracle mismatch, 2 malformed input, 3 semantic error
(label or dimension mismatch, degenerate input).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import sublattice
from .errors import LatticeError
from .generator import Stream, random_subspace
from .lattice import FiniteVectorLattice, Functional
from .oracle import lattice_generated_subspace
from .rational import format_rational
from .ratlinalg import Subspace, canonicalize
from .report import (
    MalformedInput,
    analyze_report,
    classify_report,
    dumps,
    parse_functional_input,
    parse_subspace_input,
    pl_demo_report,
)

EXIT_MISMATCH = 1
EXIT_MALFORMED = 2
EXIT_SEMANTIC = 3


def _closure(Y: Subspace) -> Subspace:
    # looked up at call time so tests can swap in a faulty engine
    return sublattice.sublattice_closure(Y)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None


def _mismatch(Y: Subspace) -> bool:
    return _closure(Y) != lattice_generated_subspace(Y.basis, Y.labels)


def minimize_mismatch(Y: Subspace) -> Subspace:
    """Shrink a disagreeing instance: drop spanning vectors, then coordinates, while it still disagrees."""
    rows, labels = [list(r) for r in Y.basis], list(Y.labels)
    changed = True
    while changed:
        changed = False
        for i in range(len(rows)):
            cand = rows[:i] + rows[i + 1:]
            if _mismatch(canonicalize(cand, labels)):
                rows, changed = cand, True
                break
        if changed:
            continue
        for k in range(len(labels)):
            if len(labels) == 1:
                break
            cand_labels = labels[:k] + labels[k + 1:]
            cand = [r[:k] + r[k + 1:] for r in rows]
            if _mismatch(canonicalize(cand, cand_labels)):
                rows, labels, changed = cand, cand_labels, True
                break
    return canonicalize(rows, labels)


def oracle_sweep(seed: int, cases: int, max_dim: int) -> dict:
    """Compare engine closure with the brute-force oracle on ``cases`` random subspaces."""
    if not 0 <= seed < 2**64:
        raise LatticeError("--seed must be an unsigned 64-bit integer")
    if cases < 0:
        raise LatticeError("--cases must be nonnegative")
    if max_dim < 1 or max_dim > 8:
        raise LatticeError("--max-dim must be between 1 and 8")
    rs = Stream(seed)
    agree = 0
    failure = None
    for case in range(cases):
        n = rs.randint(1, max_dim)
        d = rs.randint(0, n)
        Y = random_subspace(rs, n, d)
        if _mismatch(Y):
            small = minimize_mismatch(Y)
            failure = {
                "case": case,
                "labels": list(Y.labels),
                "basis": [[format_rational(a) for a in r] for r in Y.basis],
                "minimized": {
                    "labels": list(small.labels),
                    "basis": [[format_rational(a) for a in r] for r in small.basis],
                },
            }
            break
        agree += 1
    return {
        "seed": seed,
        "cases": cases,
        "max_dim": max_dim,
        "agree": agree,
        "mismatches": 0 if failure is None else 1,
        "first_mismatch": failure,
        "summary": f"{agree}/{cases} agree" if failure is None else f"mismatch at case {failure['case']}",
    }


def _emit(report: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        sys.stdout.write(dumps(report))
    else:
        sys.stdout.write("\n".join(text_lines(report)) + "\n")


def _analyze_text(r: dict):
    yield f"labels: {' '.join(r['input']['labels'])}"
    yield f"dim {r['input']['dim']}, codim {r['input']['codim']}"
    yield f"sublattice: {r['is_sublattice']}"
    if not r["is_sublattice"]:
        yield f"closure dim {r['closure']['dim']} (witness pair {r['witness_pair']}); fields below describe the closure"
    yield f"ideal: {r['is_ideal']['zero_set'] if r['is_ideal'] else 'no'}"
    dec = r["clan_decomposition"]
    yield f"kernel: {dec['kernel']}  clans: {dec['clans']}"
    yield f"constraints: {len(r['constraint_set'])}; factorization: {len(r['codim1_factorization'])}"
    li = r["largest_ideal"]
    yield f"largest ideal: zero set {li['zero_set']}, codim {li['codim']} <= {li['bound']}"
    u = r["unit_vector_census"]
    yield f"unit vectors: {u['count']} in [{u['lower']}, {u['upper']}]"


def _cmd_analyze(args) -> int:
    labels, rows = parse_subspace_input(_read_json(args.input))
    Y = canonicalize(rows, labels)
    _emit(analyze_report(Y), args.format, _analyze_text)
    return 0


def _cmd_oracle_check(args) -> int:
    start = time.perf_counter()
    report = oracle_sweep(args.seed, args.cases, args.max_dim)
    elapsed = time.perf_counter() - start
    _emit(report, args.format, lambda r: [r["summary"]] + (
        [json.dumps(r["first_mismatch"], sort_keys=True)] if r["first_mismatch"] else []))
    # timing goes to stderr so stdout stays byte-stable
    print(f"elapsed {elapsed:.3f}s", file=sys.stderr)
    return 0 if report["mismatches"] == 0 else EXIT_MISMATCH


def _cmd_classify(args) -> int:
    labels, coeffs = parse_functional_input(_read_json(args.input))
    if not labels:
        raise LatticeError("the functional has no coordinates")
    phi: Functional = FiniteVectorLattice(labels).functional(coeffs)
    _emit(classify_report(phi), args.format, lambda r: [
        f"{k}: {v}" for k, v in sorted(r["classification"].items()) if k != "homomorphism_parts"
    ] + [f"kernel_is_sublattice: {r['kernel_is_sublattice']}"])
    return 0


def _cmd_pl_demo(args) -> int:
    if args.n < 1:
        raise LatticeError("--n must be at least 1")
    _emit(pl_demo_report(args.n), args.format, lambda r: [
        f"w_{r['n']} breakpoints {r['witness']['breakpoints']} values {r['witness']['values']}",
        f"w_n in J: {r['witness_in_J']}; f0 in J: {r['f0_in_J']}",
        f"||f0 - w_n||_1 = {r['norm_f0_minus_witness']}",
    ])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vlattice", description="Sublattices and ideals of Q^Omega, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("analyze", help="full structural report for a subspace")
    p.add_argument("--input", default="-", help='JSON file {"labels": [...], "basis": [[...]]}, or - for stdin')
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("oracle-check", help="engine vs brute-force oracle sweep")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--max-dim", type=int, default=6)
    common(p)
    p.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("classify", help="classify a functional and cross-check its kernel")
    p.add_argument("--input", default="-", help="JSON object {label: value, ...}, or - for stdin")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("pl-demo", help="the non-uniformly-closed ideal of piecewise-affine functions")
    p.add_argument("--n", type=int, default=2)
    common(p)
    p.set_defaults(func=_cmd_pl_demo)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
