"""Command-line interface.

Exit codes: 0 success / all series equal, 1 mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import formulas, ideal, monomials, sl2
from .series import Series3

METHODS = (
    "ehf",
    "ehf-prime",
    "fermionic",
    "bosonic",
    "supernomial",
    "lattice",
    "quotient-a",
    "quotient-b",
    "quotient-c",
)
LEVEL_ONE_ONLY = {"ehf-prime", "bosonic", "supernomial"}


class UsageError(Exception):
    pass


def character(method: str, level: int, q_max: int) -> Series3:
    """Evaluate one character route by name."""
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if level < 1:
        raise UsageError("level must be >= 1")
    if q_max < 0:
        raise UsageError("qmax must be >= 0")
    if method in LEVEL_ONE_ONLY and level != 1:
        raise UsageError(f"method {method!r} is only available at level 1")
    if method == "ehf":
        return monomials.character_of(monomials.EHF(level), q_max)
    if method == "ehf-prime":
        return monomials.character_of(monomials.EHF_PRIME, q_max)
    if method == "fermionic":
        return formulas.fermionic_level1(q_max) if level == 1 else formulas.fermionic_level_k(level, q_max)
    if method == "bosonic":
        return formulas.bosonic_level1(q_max)
    if method == "supernomial":
        return formulas.fused_character_level1(q_max)
    if method == "lattice":
        return formulas.principal_char(formulas.gram_matrix_Qk(level), q_max)
    builder = {"quotient-a": ideal.relations_A, "quotient-b": ideal.relations_B, "quotient-c": ideal.relations_C}[method]
    return ideal.quotient_character(builder(level), q_max)


def series_payload(series: Series3, level: int, method: str) -> dict:
    return {"level": level, "qmax": series.q_max, "method": method, "terms": series.to_records()}


def dump_json(series: Series3, level: int, method: str) -> str:
    return json.dumps(series_payload(series, level, method), indent=2) + "\n"


def load_json(text: str) -> tuple[Series3, dict]:
    payload = json.loads(text)
    return Series3.from_records(int(payload["qmax"]), payload["terms"]), payload


def dump_csv(series: Series3) -> str:
    lines = ["q,z,u,c"]
    lines += [f"{r['q']},{r['z']},{r['u']},{r['c']}" for r in series.to_records()]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_char(args) -> int:
    s = character(args.method, args.level, args.qmax)
    _emit(dump_json(s, args.level, args.method) if args.format == "json" else dump_csv(s), args.out)
    return 0


def cmd_compare(args) -> int:
    names = [m for m in (args.methods or "").split(",") if m]
    entries = [(m, character(m, args.level, args.qmax)) for m in names]
    for path in args.golden or ():
        with open(path, encoding="utf-8") as fh:
            s, payload = load_json(fh.read())
        if s.q_max != args.qmax:
            if s.q_max < args.qmax:
                raise UsageError(f"golden file {path} only reaches q^{s.q_max}")
            s = s.restrict(args.qmax)
        entries.append((f"golden:{path}", s))
    if len(entries) < 2:
        raise UsageError("compare needs at least two series")
    if any(m == "bosonic" for m, _ in entries):
        # the bosonic product carries no u-grading
        entries = [(m, s.at_u_one()) for m, s in entries]
    ref_name, ref = entries[0]
    lines = []
    status = 0
    for name, s in entries[1:]:
        d = ref.first_difference(s)
        if d is None:
            lines.append(f"{ref_name} == {name}: equal ({len(ref)} terms)")
        else:
            status = 1
            lines.append(
                f"{ref_name} != {name}: first difference at (q,z,u)={d}: {ref[d]} vs {s[d]}"
            )
    lines.append("OK" if status == 0 else "MISMATCH")
    _emit("\n".join(lines) + "\n", args.out)
    return status


def cmd_basis(args) -> int:
    if args.variant == "ehf-prime" and args.level != 1:
        raise UsageError("variant 'ehf-prime' is only available at level 1")
    p = monomials.EHF_PRIME if args.variant == "ehf-prime" else monomials.EHF(args.level)
    text = "".join(f"{m}\n" for m in monomials.enumerate_monomials(p, args.qmax))
    _emit(text, args.out)
    return 0


def cmd_dims(args) -> int:
    builder = {"A": ideal.relations_A, "B": ideal.relations_B, "C": ideal.relations_C}[args.algebra]
    _emit(ideal.table_to_csv(ideal.dimension_table(builder(args.level), args.qmax)), args.out)
    return 0


def cmd_standard(args) -> int:
    spec = ideal.relations_B(1)
    prime = {}
    for m in monomials.enumerate_monomials(monomials.EHF_PRIME, args.qmax):
        prime.setdefault(m.tridegree, set()).add(m)
    lines = []
    bad = 0
    for q, z, u, *_ in ideal.dimension_table(spec, args.qmax):
        d = (q, z, u)
        std = ideal.standard_monomials(spec, d, args.order)
        ref = prime.get(d, set())
        if std == ref:
            lines.append(f"{d}: {len(std)} standard = ehf' OK")
        else:
            bad += 1
            extra = ", ".join(sorted(map(str, std - ref)))
            missing = ", ".join(sorted(map(str, ref - std)))
            lines.append(f"{d}: MISMATCH standard-only [{extra}] ehf'-only [{missing}]")
    lines.append(f"order={args.order} qmax={args.qmax}: {bad} mismatching degree(s)")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if bad else 0


def cmd_degen(args) -> int:
    try:
        s = Fraction(args.s)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad value for --s: {args.s}") from exc
    try:
        triple = sl2.degeneration_matrices(s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = triple.relations_hold() and triple.shape_ok()
    head = f"sl2 relations: {'OK' if ok else 'FAILED'}"
    if s == 1:
        text = head + "; limits trivial at s=1\n"
    else:
        seq = [s / 2**j for j in range(4)]
        report = sl2.degeneration_limits(seq)
        lines = [head]
        for row in report["rows"]:
            e, h, f = row["residuals"]
            lines.append(f"s={row['s']}: |(eps-1)E - E14|={e} |(1-eps)H - E24|={h} |sF + E23|={f}")
        lines.append(f"residuals shrink monotonically: {'yes' if report['monotone'] else 'no'}")
        text = "\n".join(lines) + "\n"
        ok = ok and report["monotone"]
    _emit(text, args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pbwchar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, level=True, qmax=True):
        if level:
            p.add_argument("--level", type=int, default=1)
        if qmax:
            p.add_argument("--qmax", type=int, default=6)
        p.add_argument("--out", default=None, help="write output to this file")

    p = sub.add_parser("char", help="print one character")
    p.add_argument("--method", required=True, choices=METHODS)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    common(p)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("compare", help="check that several routes give the same series")
    p.add_argument("--methods", default="", help="comma-separated method names")
    p.add_argument("--golden", action="append", help="JSON series file to include (repeatable)")
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("basis", help="list admissible monomials")
    p.add_argument("--variant", choices=("ehf", "ehf-prime"), default="ehf")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("dims", help="CSV table of graded dimensions of a quotient")
    p.add_argument("--algebra", choices=("A", "B", "C"), required=True)
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("standard", help="standard monomials of B_1 against the ehf' set")
    p.add_argument("--order", choices=ideal.ORDERS, default="lex")
    common(p, level=False)
    p.set_defaults(func=cmd_standard)

    p = sub.add_parser("degen", help="check the degenerating sl2 family at parameter s")
    p.add_argument("--s", required=True, help="rational in (0, 1], e.g. 1/2")
    common(p, level=False, qmax=False)
    p.set_defaults(func=cmd_degen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"pbwchar: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
