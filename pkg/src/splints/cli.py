"""Command-line surface: enumeration, verification, branching demonstrations.

All JSON output is deterministic: sorted keys, canonical orderings, no
timing data.  Text output may include timing.  Exit status: 0 on success,
1 on verification mismatch, 2 on usage or capacity errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .branch import (
    fundamental_weights,
    length_class_indices,
    match_pattern,
    subalgebra_highest_weights,
    weight_multiplicities,
)
from .catalog import parse_stem
from .embed import find_embeddings
from .errors import CapacityError, DomainError
from .rootsys import PositiveRootSet, build_positive_roots
from .splint import descriptor, enumerate_splints, verify_table
from .table import DESK_TARGETS, TABLE_VERSION, rows_for
from .weyl import splint_classes, weyl_group

_CLASS_ORDER = {"metric": 0, "semimetric": 1, "nonmetric": 2}


def _parse_target(text: str) -> tuple[str, int]:
    head = text[:1].upper()
    tail = text[1:]
    if not head.isalpha() or not tail.isdigit():
        raise DomainError(f"malformed target {text!r}; expected e.g. B2, F4")
    return head, int(tail)


def enot(vec) -> str:
    """Human-readable e-notation for an integer vector, e.g. e1-2e2+e3."""
    terms = []
    for i, c in enumerate(vec, 1):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if terms else "")
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        terms.append(f"{sign}{coef}e{i}")
    return "".join(terms) or "0"


def _part_text(target: PositiveRootSet, part) -> str:
    return "{" + ", ".join(enot(target.roots[i]) for i in part) + "}"


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _target_json(target: PositiveRootSet) -> dict:
    return {
        "family": target.family,
        "rank": target.rank,
        "roots": [list(v) for v in target.roots],
    }


def _cmd_roots(args) -> int:
    target = build_positive_roots(args.type.upper(), args.rank)
    if args.json:
        _emit_json(
            {
                "target": _target_json(target),
                "triples": len(target.triples),
                "version": __version__,
            }
        )
        return 0
    print(f"{target.family}{target.rank}: {target.size} positive roots, {len(target.triples)} sum triples")
    for i, v in enumerate(target.roots):
        print(f"  [{i}] {enot(v)}")
    return 0


def _cmd_embed(args) -> int:
    stem = parse_stem(args.stem)
    family, rank = _parse_target(args.target)
    target = build_positive_roots(family, rank)
    if args.metric:
        found = [a for a in find_embeddings(stem, target) if a.metric_class == "metric"]
    else:
        found = list(find_embeddings(stem, target))
    if args.enumerate:
        by_image: dict = {}
        for a in found:
            by_image.setdefault(a.image, []).append(a)
        for image in sorted(by_image, key=sorted):
            group = by_image[image]
            best = min(group, key=lambda a: _CLASS_ORDER[a.metric_class])
            roots_text = ", ".join(enot(target.roots[i]) for i in sorted(image))
            print(f"image={{{roots_text}}} class={best.metric_class} maps={len(group)}")
        print(f"{len(by_image)} images, {len(found)} embeddings")
    else:
        print("true" if found else "false")
    return 0


def _classes_with_descriptors(target, records):
    group = weyl_group(target)
    classes = splint_classes(records, group)
    summaries = []
    for cls in classes:
        rep = descriptor(records[cls.record_ids[0]]).render()
        summaries.append((cls.class_id, cls.size, rep))
    return summaries


def _cmd_splints(args) -> int:
    family, rank = _parse_target(args.type)
    target = build_positive_roots(family, rank)
    records = enumerate_splints(target, jobs=args.jobs)
    summaries = _classes_with_descriptors(target, records)
    if args.json:
        doc = {
            "classes": [
                {"id": cid, "representative": rep, "size": size}
                for cid, size, rep in summaries
            ],
            "splints": [
                {
                    "part1": [list(target.roots[i]) for i in r.partition.part1],
                    "part2": [list(target.roots[i]) for i in r.partition.part2],
                    "realizations1": [
                        {"metric": x.best_class, "stem": x.stem.name} for x in r.realizations1
                    ],
                    "realizations2": [
                        {"metric": x.best_class, "stem": x.stem.name} for x in r.realizations2
                    ],
                    "weyl_class": r.weyl_class,
                }
                for r in records
            ],
            "target": _target_json(target),
            "version": __version__,
        }
        _emit_json(doc)
        return 0
    print(f"{target.family}{target.rank}: {len(records)} splints, {len(summaries)} Weyl classes")
    for n, r in enumerate(records):
        print(
            f"  [{n}] class={r.weyl_class} {_part_text(target, r.partition.part1)} | "
            f"{_part_text(target, r.partition.part2)} :: {descriptor(r).render()}"
        )
    if args.classes:
        print("classes:")
        for cid, size, rep in summaries:
            print(f"  [{cid}] size={size} {rep}")
    return 0


def _dump_expected() -> int:
    rows = []
    for family, rank in DESK_TARGETS:
        for row in rows_for(family, rank):
            rows.append(
                {
                    "family": row.family,
                    "label1": row.label1,
                    "label2": row.label2,
                    "part1": [list(v) for v in row.part1],
                    "part2": [list(v) for v in row.part2],
                    "rank": row.rank,
                    "row": row.row_type,
                }
            )
    _emit_json({"rows": rows, "version": TABLE_VERSION})
    return 0


def _cmd_verify(args) -> int:
    if args.dump_expected:
        return _dump_expected()
    if args.all:
        targets = list(DESK_TARGETS)
    elif args.targets:
        targets = [_parse_target(t) for t in args.targets.split(",")]
    else:
        raise DomainError("verify needs --all, --targets, or --dump-expected")
    report = verify_table(targets, jobs=args.jobs)
    for t in report.targets:
        matched = sum(1 for rc in t.rows if rc.found)
        status = "PASS" if t.passed else "FAIL"
        print(
            f"{t.family}{t.rank}: splints={t.splint_count} classes={t.found_classes} "
            f"expected={t.expected_classes} witnesses={matched}/{len(t.rows)} "
            f"bijection={'ok' if t.bijection_ok else 'FAIL'} {t.elapsed:.1f}s {status}"
        )
        if not t.passed:
            for cls in t.classes:
                rows = ",".join(str(r) for r in cls.witness_rows) or "none"
                print(
                    f"    class {cls.class_id}: size={cls.size} [{cls.representative}] witness_rows={rows}"
                )
    ok = report.passed
    good = sum(1 for t in report.targets if t.passed)
    print(f"overall: {'PASS' if ok else 'FAIL'} ({good}/{len(report.targets)} targets)")
    return 0 if ok else 1


def _parse_sub(target: PositiveRootSet, text: str) -> tuple[int, ...]:
    if text in ("long", "short"):
        return length_class_indices(target, text)
    out = []
    for token in text.split(";"):
        token = token.strip()
        if not token:
            continue
        if "," in token:
            vec = tuple(int(x) for x in token.split(","))
            out.append(target.index_of(vec))
        else:
            i = int(token)
            if not 0 <= i < target.size:
                raise DomainError(f"root index {i} out of range for {target.family}{target.rank}")
            out.append(i)
    return tuple(out)


def _fmt_weight(w) -> str:
    return "(" + ", ".join(str(x) for x in w) + ")"


def _cmd_branch(args) -> int:
    family, rank = _parse_target(args.type)
    target = build_positive_roots(family, rank)
    lam = tuple(Fraction(tok) for tok in args.weight.split(","))
    weights = weight_multiplicities(family, rank, lam)
    dim = sum(weights.values())
    # validate everything before emitting output so errors never leave partial text
    sub = _parse_sub(target, args.sub)
    hw = subalgebra_highest_weights(target, weights, sub)
    print(f"{family}{rank} highest weight {_fmt_weight(lam)}: dimension {dim}, {len(weights)} distinct weights")
    sub_text = ", ".join(enot(target.roots[i]) for i in sub)
    print(f"restriction to {{{sub_text}}}: {len(hw)} highest weights")
    for w in sorted(hw):
        print(f"  {_fmt_weight(w)} x {hw[w]}")
    if args.match:
        pf, pr = _parse_target(args.match)
        m = match_pattern(hw, pf, pr)
        if m is None:
            print(f"no {args.match} pattern matches")
        else:
            p, q = m.coefficients
            print(
                f"{args.match} pattern: coefficients ({p}, {q}), total {m.total}, "
                f"pattern highest weight {_fmt_weight(m.highest_weight)}"
            )
            for src, dst in m.anchors:
                print(f"  {_fmt_weight(src)} -> {_fmt_weight(dst)}")
    return 0


def _cmd_bench(args) -> int:
    targets = (
        [_parse_target(t) for t in args.targets.split(",")]
        if args.targets
        else [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]
    )
    print(f"{'target':8} {'roots':>5} {'splints':>7} {'classes':>7} {'enum_s':>8} {'class_s':>8}")
    for family, rank in targets:
        target = build_positive_roots(family, rank)
        t0 = time.perf_counter()
        records = enumerate_splints(target, jobs=args.jobs)
        t1 = time.perf_counter()
        classes = splint_classes(records, weyl_group(target))
        t2 = time.perf_counter()
        print(
            f"{family + str(rank):8} {target.size:>5} {len(records):>7} {len(classes):>7} "
            f"{t1 - t0:>8.2f} {t2 - t1:>8.2f}"
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splints", description=__doc__)
    parser.add_argument("--version", action="version", version=f"splints {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p_roots = subs.add_parser("roots", help="print a positive root system")
    p_roots.add_argument("--type", required=True, help="family letter, e.g. B")
    p_roots.add_argument("--rank", required=True, type=int)
    p_roots.add_argument("--json", action="store_true")
    p_roots.set_defaults(func=_cmd_roots)

    p_embed = subs.add_parser("embed", help="embedding queries")
    p_embed.add_argument("--stem", required=True, help="stem string, e.g. A2+2A1")
    p_embed.add_argument("--target", required=True, help="target system, e.g. B4")
    mode = p_embed.add_mutually_exclusive_group()
    mode.add_argument("--enumerate", action="store_true", help="list all embedding images")
    mode.add_argument("--exists", action="store_true", help="print true/false (default)")
    p_embed.add_argument("--metric", action="store_true", help="restrict to metric embeddings")
    p_embed.set_defaults(func=_cmd_embed)

    p_spl = subs.add_parser("splints", help="enumerate splints of a target")
    p_spl.add_argument("--type", required=True, help="target system, e.g. F4")
    p_spl.add_argument("--classes", action="store_true", help="print Weyl class summary")
    p_spl.add_argument("--json", action="store_true")
    p_spl.add_argument("--jobs", type=int, default=1)
    p_spl.set_defaults(func=_cmd_splints)

    p_ver = subs.add_parser("verify", help="verify the classification table")
    p_ver.add_argument("--all", action="store_true")
    p_ver.add_argument("--targets", help="comma-separated targets, e.g. G2,F4")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--dump-expected", action="store_true", help="export expected table as JSON")
    p_ver.set_defaults(func=_cmd_verify)

    p_br = subs.add_parser("branch", help="restrict a module to a subsystem")
    p_br.add_argument("--type", required=True, help="ambient system, e.g. B2")
    p_br.add_argument("--weight", required=True, help="comma-separated rational coordinates")
    p_br.add_argument("--sub", required=True, help="'long', 'short', or ';'-separated roots")
    p_br.add_argument("--match", help="rank-2 pattern family to match, e.g. A2")
    p_br.set_defaults(func=_cmd_branch)

    p_bench = subs.add_parser("bench", help="time the enumeration pipeline")
    p_bench.add_argument("--targets", help="comma-separated targets")
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
