"""Command line interface.

Subcommands:

* ``order``    multiplicative order of x modulo a polynomial
* ``profile``  minimum-distance runs over a length range
* ``score``    cumulative distance scores at one or more block lengths
* ``search``   exhaustive sweep over one degree, with checkpointing
* ``verify``   cross-check the transform pipeline against brute force
* ``tables``   recompute the built-in catalog and flag mismatches

Human-readable output is the default; ``--csv`` and ``--json`` switch to
machine formats.  Unknown values (lengths beyond a polynomial's order)
render as ``-`` in human output, an empty field in CSV, and ``null`` in
JSON.  Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import catalog, distance, gf2poly, profile, search

SCORE_HEADER = ("poly_hex", "degree", "order", "M", "score")
PROFILE_HEADER = ("poly_hex", "n_lo", "n_hi", "d")
DISTANCE_HEADER = ("poly_hex", "n", "d")


def _poly_arg(text: str) -> gf2poly.Gf2Poly:
    try:
        return gf2poly.parse_hex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _targets_arg(text: str) -> tuple[int, ...]:
    try:
        values = sorted({int(part, 10) for part in text.split(",") if part})
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad length list {text!r}") from exc
    if not values or values[0] < 1:
        raise argparse.ArgumentTypeError(f"bad length list {text!r}")
    return tuple(values)


def _range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    try:
        pair = (int(lo, 10), int(hi, 10))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from exc
    if pair[0] < 1 or pair[1] < pair[0]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return pair


def _csv_out():
    return csv.writer(sys.stdout, lineterminator="\n")


def _dump_json(payload) -> None:
    json.dump(payload, sys.stdout, indent=1)
    sys.stdout.write("\n")


def _dash(value: int | None) -> str:
    return "-" if value is None else str(value)


def cmd_order(args) -> int:
    print(gf2poly.order(args.poly))
    return 0


def cmd_profile(args) -> int:
    prof = profile.build_profile(args.poly, args.length)
    if args.json:
        _dump_json(prof.as_dict())
        return 0
    if args.csv:
        out = _csv_out()
        out.writerow(PROFILE_HEADER)
        for lo, hi, d in prof.runs:
            out.writerow([prof.g.to_hex(), lo, hi, d])
        return 0
    g = prof.g
    print(f"poly {g.to_hex()}  degree {g.degree}  order {prof.order}")
    if not prof.runs:
        print("  no lengths in range (order below degree+1)")
    for lo, hi, d in prof.runs:
        span = f"{lo}" if lo == hi else f"{lo}..{hi}"
        print(f"  n {span:<12} d {d}")
    return 0


def cmd_score(args) -> int:
    result = profile.score_targets(args.poly, args.lengths)
    g = result.g
    if args.json:
        _dump_json(
            {
                "poly": g.to_hex(),
                "degree": g.degree,
                "order": result.order,
                "scores": {str(m): s for m, s in sorted(result.scores.items())},
            }
        )
        return 0
    if args.csv:
        out = _csv_out()
        out.writerow(SCORE_HEADER)
        for m, s in sorted(result.scores.items()):
            out.writerow([g.to_hex(), g.degree, result.order, m, "" if s is None else s])
        return 0
    print(f"poly {g.to_hex()}  degree {g.degree}  order {result.order}")
    for m, s in sorted(result.scores.items()):
        print(f"  M {m:<6} S {_dash(s)}")
    return 0


def cmd_search(args) -> int:
    config = search.SearchConfig(
        p=args.degree,
        targets=args.lengths,
        top_k=args.top_k,
        workers=args.workers,
        block_size=args.block_size,
        checkpoint_path=args.checkpoint,
        long_run=args.long_run,
    )

    progress = None
    if args.progress:

        def progress(done: int, total: int, scanned: int, skipped: int) -> None:
            print(
                f"block {done}/{total}  scanned {scanned}  order-skipped {skipped}",
                file=sys.stderr,
            )

    board = search.run_search(config, progress=progress)
    if args.json:
        _dump_json(
            {
                "degree": config.p,
                "lengths": list(config.targets),
                "top_k": config.top_k,
                "scanned": board.scanned,
                "skipped_low_order": board.skipped_low_order,
                "complete": board.complete,
                "boards": {
                    str(m): [
                        {"poly": row.g.to_hex(), "order": row.order, "score": row.score}
                        for row in board.boards[m]
                    ]
                    for m in config.targets
                },
            }
        )
        return 0
    if args.csv:
        out = _csv_out()
        out.writerow(SCORE_HEADER)
        for row in board.rows():
            out.writerow(row)
        return 0
    print(
        f"degree {config.p}  scanned {board.scanned}  "
        f"order-skipped {board.skipped_low_order}"
    )
    for m in config.targets:
        print(f"M={m} top {len(board.boards[m])}")
        for rank, row in enumerate(board.boards[m], start=1):
            print(f"  {rank:>3}  {row.g.to_hex():<8} order {row.order:<8} S {row.score}")
    return 0


def cmd_verify(args) -> int:
    deg_lo, deg_hi = args.degrees
    off_lo, off_hi = args.offsets
    if deg_lo < 2 or deg_hi > 20:
        raise ValueError("degrees must lie within 2:20")
    if off_hi > distance.BRUTE_FORCE_MAX_DIM:
        raise ValueError(
            f"offsets above {distance.BRUTE_FORCE_MAX_DIM} exceed the "
            "brute-force dimension cap"
        )

    import random

    rng = random.Random(args.seed)
    mismatches = 0
    for _ in range(args.samples):
        p = rng.randint(deg_lo, deg_hi)
        mask = (1 << p) | 1
        if p > 1:
            mask |= rng.getrandbits(p - 1) << 1
        g = gf2poly.Gf2Poly(mask)
        n = p + rng.randint(off_lo, off_hi)
        # module attribute lookups keep both routes swappable in tests
        fast = distance.min_distance(g, n)
        slow = distance.brute_force_min_distance(g, n)
        if fast != slow:
            mismatches += 1
            print(f"MISMATCH poly {g.to_hex()} n {n} transform {fast} brute-force {slow}")
    agree = args.samples - mismatches
    print(
        f"{agree}/{args.samples} samples agree "
        f"(degrees {deg_lo}:{deg_hi}, offsets {off_lo}:{off_hi}, seed {args.seed})"
    )
    return 1 if mismatches else 0


def _check_entry(entry: catalog.CatalogEntry, targets: tuple[int, ...]):
    """Recompute one catalog row; returns (result, list of mismatch strings)."""
    g = gf2poly.parse_hex(entry.poly)
    result = profile.score_targets(g, targets)
    problems = []
    if result.order != entry.order:
        problems.append(f"order {result.order} != {entry.order}")
    for m in targets:
        got, want = result.scores[m], entry.scores[m]
        if got != want:
            problems.append(f"S({m}) {_dash(got)} != {_dash(want)}")
    return result, problems


def cmd_tables(args) -> int:
    wanted = args.sections or catalog.SECTION_NAMES
    for name in wanted:
        if name not in catalog.SECTION_NAMES:
            raise ValueError(f"unknown section {name!r}; pick from {catalog.SECTION_NAMES}")

    mismatches = 0
    json_sections = []
    score_rows = []
    distance_rows = []

    for section in catalog.SECTIONS:
        if section.name not in wanted:
            continue
        if not args.csv and not args.json:
            heads = "  ".join(f"M={m}" for m in section.targets)
            print(f"section {section.name}  ({heads})")
        json_entries = []
        for entry in section.entries:
            result, problems = _check_entry(entry, section.targets)
            mismatches += len(problems)
            g = result.g
            for m in section.targets:
                score_rows.append(
                    [
                        g.to_hex(),
                        g.degree,
                        result.order,
                        m,
                        "" if result.scores[m] is None else result.scores[m],
                    ]
                )
            json_entries.append(
                {
                    "poly": g.to_hex(),
                    "order": result.order,
                    "scores": {str(m): result.scores[m] for m in section.targets},
                    "note": entry.note,
                    "mismatches": problems,
                }
            )
            if not args.csv and not args.json:
                cells = "  ".join(f"{_dash(result.scores[m]):>6}" for m in section.targets)
                status = "ok" if not problems else "MISMATCH: " + "; ".join(problems)
                print(f"  {g.to_hex():<8} order {result.order:<8} {cells}  {status}")
        json_sections.append({"name": section.name, "entries": json_entries})

    if "distances" in wanted:
        if not args.csv and not args.json:
            lengths = ",".join(str(n) for n in catalog.DISTANCE_POINT_LENGTHS)
            print(f"section distances  (d at n={lengths})")
        json_entries = []
        for point in catalog.DISTANCE_POINTS:
            g = gf2poly.parse_hex(point.poly)
            prof = profile.build_profile(g, max(catalog.DISTANCE_POINT_LENGTHS))
            got = tuple(prof.distance_at(n) for n in catalog.DISTANCE_POINT_LENGTHS)
            problems = []
            if point.expected is not None and got != point.expected:
                problems.append(f"distances {got} != {point.expected}")
                mismatches += 1
            for n, d in zip(catalog.DISTANCE_POINT_LENGTHS, got):
                distance_rows.append([g.to_hex(), n, d])
            json_entries.append(
                {
                    "poly": g.to_hex(),
                    "lengths": list(catalog.DISTANCE_POINT_LENGTHS),
                    "distances": list(got),
                    "note": point.note,
                    "mismatches": problems,
                }
            )
            if not args.csv and not args.json:
                cells = " ".join(str(d) for d in got)
                if problems:
                    status = "MISMATCH: " + "; ".join(problems)
                else:
                    status = "ok" if point.expected is not None else "derived"
                print(f"  {g.to_hex():<8} {cells}  {status}")
        json_sections.append({"name": "distances", "entries": json_entries})

    if args.json:
        _dump_json({"sections": json_sections, "mismatches": mismatches})
    elif args.csv:
        out = _csv_out()
        if score_rows:
            out.writerow(SCORE_HEADER)
            out.writerows(score_rows)
        if distance_rows:
            if score_rows:
                print()
            out.writerow(DISTANCE_HEADER)
            out.writerows(distance_rows)
    else:
        print(f"{mismatches} mismatches")
    return 1 if mismatches else 0


def _add_format_flags(sub) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--csv", action="store_true", help="emit CSV")
    group.add_argument("--json", action="store_true", help="emit JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crcsieve",
        description="distance profiles and scores for shortened CRC codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_order = sub.add_parser("order", help="multiplicative order of x mod the polynomial")
    p_order.add_argument("poly", type=_poly_arg, help="generator, hex mask")
    p_order.set_defaults(func=cmd_order)

    p_profile = sub.add_parser("profile", help="distance runs for lengths degree+1..M")
    p_profile.add_argument("poly", type=_poly_arg, help="generator, hex mask")
    p_profile.add_argument("length", type=int, help="largest block length M")
    _add_format_flags(p_profile)
    p_profile.set_defaults(func=cmd_profile)

    p_score = sub.add_parser("score", help="cumulative distance score at each M")
    p_score.add_argument("poly", type=_poly_arg, help="generator, hex mask")
    p_score.add_argument("lengths", type=_targets_arg, help="comma-separated M values")
    _add_format_flags(p_score)
    p_score.set_defaults(func=cmd_score)

    p_search = sub.add_parser("search", help="rank every polynomial of one degree")
    p_search.add_argument("degree", type=int, help="generator degree to sweep")
    p_search.add_argument(
        "--M",
        dest="lengths",
        type=_targets_arg,
        required=True,
        help="comma-separated block lengths to score",
    )
    p_search.add_argument("--top-k", type=int, default=8, help="leaderboard size")
    p_search.add_argument("--workers", type=int, default=1, help="worker processes")
    p_search.add_argument("--block-size", type=int, default=512, help="candidates per block")
    p_search.add_argument("--checkpoint", help="JSON checkpoint path for resume")
    p_search.add_argument(
        "--long-run",
        action="store_true",
        help="acknowledge multi-hour sweeps (required for degree >= 20)",
    )
    p_search.add_argument(
        "--progress", action="store_true", help="report per-block progress on stderr"
    )
    _add_format_flags(p_search)
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser(
        "verify", help="compare transform distances against brute-force enumeration"
    )
    p_verify.add_argument(
        "--degrees", type=_range_arg, default=(4, 12), help="degree range LO:HI"
    )
    p_verify.add_argument(
        "--offsets",
        type=_range_arg,
        default=(1, 20),
        help="length offsets above the degree, LO:HI",
    )
    p_verify.add_argument("--samples", type=int, default=500, help="random samples")
    p_verify.add_argument("--seed", type=int, default=1, help="RNG seed")
    p_verify.set_defaults(func=cmd_verify)

    p_tables = sub.add_parser("tables", help="recompute the built-in catalog")
    p_tables.add_argument(
        "--sections",
        type=lambda text: tuple(part for part in text.split(",") if part),
        default=(),
        help="comma-separated subset of: " + ",".join(catalog.SECTION_NAMES),
    )
    _add_format_flags(p_tables)
    p_tables.set_defaults(func=cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, search.CheckpointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
