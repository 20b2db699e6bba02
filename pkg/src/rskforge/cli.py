"""Command-line front end.

Exit codes: 0 success, 2 usage error (malformed arguments), 3 domain error
(trivial shape, excluded shape, out-of-range n, invalid construction
parameters). Domain errors print one machine-parsable line to stderr:
``error: <kind>: <detail>``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import constructions, core, oracle, synthesis
from .core import RskError


class _UsageError(Exception):
    pass


def _perm_arg(text: str) -> core.Permutation:
    try:
        return core.parse_permutation(text)
    except RskError as e:
        raise argparse.ArgumentTypeError(str(e))


def _shape_arg(text: str) -> core.Shape:
    try:
        return core.parse_shape(text)
    except RskError as e:
        raise argparse.ArgumentTypeError(str(e))


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def _cmd_rsk(args) -> int:
    tableau = core.rsk_tableau(args.perm)
    shape = tableau.shape
    if args.json:
        _emit_json({"shape": list(shape.parts), "tableau": tableau.to_lists()})
    else:
        for row in tableau.rows:
            print(" ".join(str(x) for x in row))
        print(f"shape: {core.format_ints(shape.parts)}")
    return 0


_CONSTRUCTORS = {
    "L": (("n",), lambda n: constructions.seq_L(n)),
    "Lp": (("n",), lambda n: constructions.seq_L_prime(n)),
    "B": (("m", "n"), lambda m, n: constructions.build_B(m, n)),
    "Bp": (("m", "n"), lambda m, n: constructions.build_B_prime(m, n)),
    "A": (("perm", "k"), lambda p, k: constructions.build_A(p, k)),
    "D": (("m", "n"), lambda m, n: constructions.build_D(m, n)),
    "Dp": (("n",), lambda n: constructions.build_D_prime(n)),
}


def _cmd_construct(args) -> int:
    names, fn = _CONSTRUCTORS[args.which]
    if len(args.args) != len(names):
        raise _UsageError(
            f"construct {args.which} takes {len(names)} argument(s): {' '.join(names)}"
        )
    parsed = []
    for name, raw in zip(names, args.args):
        if name == "perm":
            try:
                parsed.append(core.parse_permutation(raw))
            except RskError as e:
                raise _UsageError(f"bad permutation {raw!r}: {e}")
        else:
            try:
                parsed.append(int(raw))
            except ValueError:
                raise _UsageError(f"argument {name} must be an integer, got {raw!r}")
    print(core.format_ints(fn(*parsed).values))
    return 0


def _cmd_synth(args) -> int:
    if args.kind == "cyclic":
        perm = synthesis.synth_cyclic(args.shape)
    else:
        perm = synthesis.synth_almost_cyclic(args.shape)
    ct = core.cycle_type(perm)
    if args.json:
        _emit_json(
            {
                "shape": list(args.shape.parts),
                "kind": args.kind,
                "permutation": list(perm.values),
                "cycle_type": list(ct.lengths),
            }
        )
    else:
        print(f"permutation: {core.format_ints(perm.values)}")
        print(f"cycle_type: {core.format_ints(ct.lengths)}")
        print(f"shape: {core.format_ints(args.shape.parts)}")
        print(f"kind: {args.kind}")
    return 0


def _cmd_census(args) -> int:
    result = oracle.cached_census(
        args.n,
        workers=args.workers,
        want_witnesses=args.witnesses,
        allow_large=args.allow_large,
    )
    text = oracle.census_to_json(result)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _cmd_verify(args) -> int:
    ok = True

    def line(n: int, check: str, good: bool, note: str = "") -> None:
        nonlocal ok
        ok = ok and good
        status = "ok" if good else "MISMATCH"
        suffix = f" ({note})" if note else ""
        print(f"verify n={n}: {check} {status}{suffix}")

    for n in range(2, args.max_n + 1):
        cen = oracle.cached_census(n, workers=args.workers)
        report = oracle.rsk_complete_types(n, census_result=cen)
        if report.vacuous:
            line(n, "complete-types", True, "vacuous: no nontrivial partitions")
        else:
            expected = sorted(report.expected, reverse=True)
            line(n, "complete-types", report.match, f"expected {expected}")
        if n % 2 == 0:
            line(n, "excluded-shape", oracle.check_excluded_two_row(n, cen))
        line(n, "two-row-classification", oracle.check_two_row_classification(n))
        line(n, "fixed-point-row-bound", oracle.check_fixed_point_row_bound(n))
    print("verify: all checks passed" if ok else "verify: FAILURES above")
    return 0 if ok else 3


def _cmd_check(args) -> int:
    for lineno, raw in enumerate(sys.stdin, start=1):
        raw = raw.strip()
        if not raw:
            continue
        try:
            payload = json.loads(raw)
            perm = core.Permutation(payload["permutation"])
            claimed_shape = tuple(payload["shape"])
            claimed_ct = tuple(payload["cycle_type"])
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise _UsageError(f"line {lineno}: not a synth record: {e}")
        shape = core.rsk_shape(perm)
        ct = core.cycle_type(perm)
        if shape != claimed_shape or ct != claimed_ct:
            print(
                f"error: check-failed: line {lineno}: recomputed "
                f"shape={shape.parts} cycle_type={ct.lengths}, claimed "
                f"shape={claimed_shape} cycle_type={claimed_ct}",
                file=sys.stderr,
            )
            return 3
        print(f"ok: line {lineno}: shape and cycle type verified")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rskforge",
        description="Insertion tableaux, witness synthesis, and S_n censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rsk = sub.add_parser("rsk", help="insertion tableau and shape of a permutation")
    p_rsk.add_argument("--perm", type=_perm_arg, required=True)
    p_rsk.add_argument("--json", action="store_true")
    p_rsk.set_defaults(func=_cmd_rsk)

    p_con = sub.add_parser("construct", help="evaluate a named construction")
    p_con.add_argument("which", choices=sorted(_CONSTRUCTORS))
    p_con.add_argument("args", nargs="*")
    p_con.set_defaults(func=_cmd_construct)

    p_syn = sub.add_parser("synth", help="synthesize a witness for a shape")
    p_syn.add_argument("--shape", type=_shape_arg, required=True)
    p_syn.add_argument("--kind", choices=["cyclic", "almost-cyclic"], required=True)
    p_syn.add_argument("--json", action="store_true")
    p_syn.set_defaults(func=_cmd_synth)

    p_cen = sub.add_parser("census", help="exhaustive census over S_n")
    p_cen.add_argument("--n", type=int, required=True)
    p_cen.add_argument("--out")
    p_cen.add_argument("--workers", type=int, default=_default_workers())
    p_cen.add_argument("--witnesses", action="store_true")
    p_cen.add_argument("--allow-large", action="store_true")
    p_cen.set_defaults(func=_cmd_census)

    p_ver = sub.add_parser("verify", help="run the characterization checks")
    p_ver.add_argument("--max-n", type=int, default=7)
    p_ver.add_argument("--workers", type=int, default=_default_workers())
    p_ver.set_defaults(func=_cmd_verify)

    p_chk = sub.add_parser("check", help="re-verify synth JSON records from stdin")
    p_chk.set_defaults(func=_cmd_check)

    return parser


def _default_workers() -> int:
    return min(4, os.cpu_count() or 1)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"error: usage: {e}", file=sys.stderr)
        return 2
    except RskError as e:
        print(f"error: {e.kind}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
