"""Command-line front end: construct arrays, analyze embeddings, scan the family.

Exit codes: 0 success, 1 a verified property failed, 2 bad or refused
parameters.  All outputs are deterministic: the same configuration writes
byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from math import gcd
from pathlib import Path

from .algebra import Field, prime_power_split
from .arrays import (
    PartiallyFilledArray,
    build_rank_one,
    entry_set_is_multiplicative_subgroup,
    field_for_parameters,
    from_text,
    is_rank_one,
    to_text,
    validate_heffter,
)
from .autgroup import AutReport, cycle_notation, exhaustive_search, restricted_search
from .catalog import BudgetExceeded, CatalogRow, Deadline, admissible_parameters, compute_row
from .embedding import (
    build_embedding,
    faces_to_json,
    faces_to_text,
    surface_report,
    trace_faces,
    validate_rotation,
    verify_biembedding,
)
from .orderings import check_globally_simple, composition_cycles, is_compatible, natural_orderings

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_PARAMS = 2

EXHAUSTIVE_DEFAULT_LIMIT = 71
CATALOG_DEFAULT_LIMIT = 500


class ParameterError(ValueError):
    pass


def _env_budget_ms() -> int | None:
    raw = os.environ.get("HEFFTER_BUDGET_MS")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"HEFFTER_BUDGET_MS must be an integer, got {raw!r}")


def _factor_q(q: int) -> tuple[int, int]:
    """Smallest admissible (m, n) with 2mn+1 = q."""
    if prime_power_split(q) is None:
        raise ParameterError(f"q={q} is not a prime power")
    half, rem = divmod(q - 1, 2)
    if rem or half % 2 == 0:
        raise ParameterError(f"(q-1)/2 must be an odd integer, got q={q}")
    for m in range(3, half):
        if half % m == 0:
            n = half // m
            if n >= 3 and gcd(m, n) == 1:
                return m, n
    raise ParameterError(f"(q-1)/2 = {half} has no factorization into odd coprime m,n >= 3")


def _resolve_instance(args) -> tuple[Field, int, int]:
    if args.q is not None:
        if args.m is not None or args.n is not None:
            if args.m is None or args.n is None or 2 * args.m * args.n + 1 != args.q:
                raise ParameterError("--q disagrees with --m/--n")
            m, n = args.m, args.n
        else:
            m, n = _factor_q(args.q)
    elif args.m is not None and args.n is not None:
        m, n = args.m, args.n
    else:
        raise ParameterError("need --m and --n, or --q")
    try:
        field = field_for_parameters(m, n)
    except ValueError as exc:
        raise ParameterError(str(exc))
    return field, m, n


def _build_array(args) -> PartiallyFilledArray:
    field, m, n = _resolve_instance(args)
    try:
        return build_rank_one(field, m, n, xi=args.xi, eps=args.eps)
    except ValueError as exc:
        raise ParameterError(str(exc))


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_construct(args) -> int:
    array = _build_array(args)
    _emit(to_text(array), args.out)
    report = validate_heffter(array)
    if not report.ok:
        print("heffter-validation failed", file=sys.stderr)
        return EXIT_PROPERTY
    return EXIT_OK


def _load_or_build_array(args) -> PartiallyFilledArray:
    if args.array is not None:
        if args.m is not None or args.n is not None or args.q is not None:
            raise ParameterError("--array cannot be combined with --m/--n/--q")
        try:
            return from_text(Path(args.array).read_text())
        except (OSError, ValueError) as exc:
            raise ParameterError(f"cannot read array file: {exc}")
    return _build_array(args)


def _run_searches(emb, m: int, n: int, mode: str, force: bool) -> list[AutReport]:
    reports = []
    if mode in ("restricted", "both"):
        reports.append(restricted_search(emb, m, n))
    if mode in ("exhaustive", "both"):
        limit = None if force else EXHAUSTIVE_DEFAULT_LIMIT
        try:
            reports.append(exhaustive_search(emb, m, n, limit=limit))
        except ValueError as exc:
            raise ParameterError(f"{exc} (use --force to lift the budget)")
    return reports


def cmd_analyze(args) -> int:
    deadline = Deadline(_env_budget_ms())
    array = _load_or_build_array(args)
    field = array.group
    m, n, q = array.m, array.n, field.q
    mn = m * n

    report: dict = {
        "command": "analyze",
        "q": q,
        "m": m,
        "n": n,
        "ell": args.ell,
        "field": field.header(),
    }
    first_failure: str | None = None

    def fail(name: str) -> None:
        nonlocal first_failure
        if first_failure is None:
            first_failure = name

    pair = None
    emb = None
    faces = None
    aut_reports: list[AutReport] = []

    try:
        validation = validate_heffter(array)
        report["heffter_ok"] = validation.ok
        if not validation.ok:
            report["violations"] = validation.violations
            fail("heffter-validation")
        deadline.check("validation")

        if first_failure is None:
            report["globally_simple"] = check_globally_simple(array)
            if not report["globally_simple"]:
                fail("globally-simple")
            deadline.check("orderings")

        if first_failure is None:
            try:
                pair = natural_orderings(array, args.ell)
            except ValueError as exc:
                raise ParameterError(str(exc))
            report["compatible"] = is_compatible(pair)
            if not report["compatible"]:
                fail("compatibility")
            deadline.check("compatibility")

        if first_failure is None:
            emb = build_embedding(array, pair)
            report["rotation_ok"] = validate_rotation(emb)
            if not report["rotation_ok"]:
                fail("rotation")
            deadline.check("rotation")

        if first_failure is None:
            faces = trace_faces(emb)
            biemb = verify_biembedding(emb, m, n, faces)
            report["biembedding_ok"] = biemb.ok
            report["faces"] = {str(k): v for k, v in biemb.face_census.items()}
            if not biemb.ok:
                report["biembedding_failures"] = biemb.failures
                fail("biembedding")
            deadline.check("faces")

        if first_failure is None:
            expected_census = {m: q * n}
            expected_census[n] = expected_census.get(n, 0) + q * m
            if biemb.face_census != expected_census:
                fail("face-census")

        if first_failure is None:
            surface = surface_report(emb, faces)
            report["euler_characteristic"] = surface.euler_characteristic
            report["genus"] = surface.genus
            if surface.genus != (2 - q * (1 + m + n - mn)) // 2:
                fail("genus")
            deadline.check("genus")

        if first_failure is None:
            aut_reports = _run_searches(emb, m, n, args.mode, args.force)
            lead = aut_reports[0]
            report["aut0"] = lead.aut0_plus + lead.aut0_minus
            report["aut0_plus"] = lead.aut0_plus
            report["aut0_minus"] = lead.aut0_minus
            report["total"] = lead.total
            report["cyclic"] = lead.cyclic
            report["generator"] = lead.generator
            report["aut_reports"] = [r.to_json() for r in aut_reports]

            rank_one = array.is_totally_filled() and is_rank_one(array)
            report["rank_one"] = rank_one
            admissible = m >= 3 and n >= 3 and m % 2 == n % 2 == 1 and gcd(m, n) == 1
            # the exact stabilizer size mn is a property of the plain
            # left-to-right orderings; other ell only obey the upper bound
            if rank_one and admissible and q == 2 * mn + 1 and args.ell == 0:
                ok = (
                    lead.aut0_plus == mn
                    and lead.aut0_minus == 0
                    and lead.cyclic
                    and lead.total == q * mn
                )
            elif m != n and m % 2 == n % 2 == 1:
                ok = lead.aut0_plus + lead.aut0_minus <= mn and lead.aut0_minus == 0
            else:
                ok = True
            if not ok:
                fail("autgroup")
            deadline.check("autgroup")

        if first_failure is None and len(aut_reports) == 2:
            lead, other = aut_reports
            report["modes_agree"] = (
                lead.total == other.total and lead.stabilizer == other.stabilizer
            )
            if not report["modes_agree"]:
                fail("modes-agree")

        if first_failure is None and report.get("rank_one"):
            report["entries_subgroup"] = entry_set_is_multiplicative_subgroup(array)
            if not report["entries_subgroup"]:
                fail("entries-subgroup")
    except BudgetExceeded as exc:
        print(f"budget exceeded at stage: {exc}", file=sys.stderr)
        return EXIT_PARAMS

    report["ok"] = first_failure is None
    report["first_failure"] = first_failure

    if args.format == "json":
        _emit(json.dumps(report, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit(_analyze_text(report, array, pair, emb), args.out)

    if args.faces_out is not None and faces is not None:
        if args.format == "json":
            Path(args.faces_out).write_text(
                json.dumps(faces_to_json(faces), sort_keys=True, indent=2) + "\n"
            )
        else:
            Path(args.faces_out).write_text(faces_to_text(faces))

    if args.figures:
        if args.out is None:
            print("--figures needs --out to place the images", file=sys.stderr)
            return EXIT_PARAMS
        if faces is not None:
            from .figures import render_face_census_figure

            census = {int(k): v for k, v in report.get("faces", {}).items()}
            render_face_census_figure(census, args.out)

    if first_failure is not None:
        print(f"{first_failure} failed", file=sys.stderr)
        return EXIT_PROPERTY
    return EXIT_OK


def _analyze_text(report: dict, array, pair, emb) -> str:
    lines = [f"instance m={report['m']} n={report['n']} q={report['q']} ell={report['ell']}"]
    lines.append(report["field"])
    for row in array.cells:
        lines.append(" ".join("-" if x is None else str(x) for x in row))
    if pair is not None:
        cycles = composition_cycles(pair)
        lines.append(
            "row-then-column composition: "
            + "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
        )
    if emb is not None:
        lines.append("rotation at 0: " + cycle_notation(emb.rotation_at_zero))
    if "faces" in report:
        census = " ".join(f"{k}:{v}" for k, v in sorted(report["faces"].items(), key=lambda kv: int(kv[0])))
        lines.append(f"faces: {census}")
    if "genus" in report:
        lines.append(f"genus: {report['genus']}")
    if "total" in report:
        lines.append(
            f"automorphisms: stabilizer {report['aut0']} "
            f"(+{report['aut0_plus']}/-{report['aut0_minus']}), total {report['total']}, "
            f"cyclic: {str(report['cyclic']).lower()}, generator {report['generator']}"
        )
    lines.append("ok" if report["ok"] else f"failed: {report['first_failure']}")
    return "\n".join(lines) + "\n"


def cmd_catalog(args) -> int:
    if args.qmax < 0:
        raise ParameterError("--qmax must be non-negative")
    if args.qmax > CATALOG_DEFAULT_LIMIT and not args.force:
        raise ParameterError(
            f"--qmax {args.qmax} exceeds the default budget {CATALOG_DEFAULT_LIMIT}; use --force"
        )
    deadline = Deadline(_env_budget_ms())
    rows = [compute_row(m, n, deadline) for m, n, _ in admissible_parameters(args.qmax)]

    if args.format == "json":
        text = json.dumps([row.to_json() for row in rows], sort_keys=True, indent=2) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CatalogRow.FIELDS)
        for row in rows:
            writer.writerow(row.to_csv_values())
        text = buffer.getvalue()
    _emit(text, args.out)

    if args.figures:
        if args.out is None:
            print("--figures needs --out to place the images", file=sys.stderr)
            return EXIT_PARAMS
        from .figures import render_catalog_figures

        render_catalog_figures(rows, args.out)
    return EXIT_OK


def _add_instance_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, help="row count (odd, >= 3, coprime to n)")
    parser.add_argument("--n", type=int, help="column count (odd, >= 3, coprime to m)")
    parser.add_argument("--q", type=int, help="field order 2mn+1; factored automatically")
    parser.add_argument("--ell", type=int, default=0, help="rows ordered right to left at the bottom")
    parser.add_argument("--xi", type=int, help="override the order-n generator")
    parser.add_argument("--eps", type=int, help="override the order-m generator")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heffter",
        description="Heffter arrays over finite fields and the embeddings of complete graphs they induce",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a rank-one Heffter array and write it")
    _add_instance_args(construct)
    construct.add_argument("--out", type=Path, help="output file (default stdout)")
    construct.set_defaults(func=cmd_construct)

    analyze = sub.add_parser("analyze", help="embed, trace faces, verify structure, count automorphisms")
    _add_instance_args(analyze)
    analyze.add_argument("--array", type=Path, help="analyze an existing array file")
    analyze.add_argument("--mode", choices=("restricted", "exhaustive", "both"), default="restricted")
    analyze.add_argument("--format", choices=("json", "text"), default="json")
    analyze.add_argument("--out", type=Path, help="report file (default stdout)")
    analyze.add_argument("--faces-out", type=Path, help="also export the face list")
    analyze.add_argument("--figures", action="store_true", help="render figures next to --out")
    analyze.add_argument("--force", action="store_true", help="lift the exhaustive-search budget")
    analyze.set_defaults(func=cmd_analyze)

    catalog = sub.add_parser("catalog", help="scan all admissible (m, n, q) up to a bound")
    catalog.add_argument("--qmax", type=int, required=True)
    catalog.add_argument("--format", choices=("csv", "json"), default="csv")
    catalog.add_argument("--out", type=Path, help="output file (default stdout)")
    catalog.add_argument("--figures", action="store_true", help="render figures next to --out")
    catalog.add_argument("--force", action="store_true", help="lift the qmax budget")
    catalog.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
