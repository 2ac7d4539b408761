"""Command-line interface: generation, verification, and reports.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 missing seeds.  TRI files are line-oriented: one triangulation per line
(ascending comma-joined triples, lexicographically sorted, space-separated),
``#`` starts a comment.  Reports print a human table followed by
machine-readable ``key=value`` lines.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import analyze, cycletop, generate
from .canon import canonical_code, canonical_form
from .errors import TriangulationError
from .surface import SurfaceDescriptor
from .transform import is_irreducible
from .triangulation import Triangulation, format_record, parse_record

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SEEDS = 3


def read_tri(path) -> list[Triangulation]:
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_record(line))
        except TriangulationError as exc:
            raise TriangulationError(exc.code, f"{path}:{lineno}: {exc}") from None
    return out


def write_tri(path, ts, header: dict | None = None):
    lines = []
    for key, value in (header or {}).items():
        lines.append(f"# {key}={value}")
    for t in ts:
        lines.append(format_record(t))
    text = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _surface(arg: str) -> SurfaceDescriptor:
    return SurfaceDescriptor.parse(arg)


def _histogram_lines(hist: dict[int, int]):
    rows = ["vertices  count", "--------  -----"]
    for n, k in sorted(hist.items()):
        rows.append(f"{n:>8}  {k:>5}")
    rows.append(f"{'total':>8}  {sum(hist.values()):>5}")
    return rows


def cmd_generate(args) -> int:
    target = _surface(args.surface)
    if target not in generate.DESK_SCALE and not args.allow_long:
        print(f"{target.name} is a long-run job; pass --allow-long (and use a checkpoint)",
              file=sys.stderr)
        return EXIT_USAGE
    checkpoint = args.checkpoint or os.environ.get("SURFTRI_CHECKPOINT_DIR")
    if target not in generate.DESK_SCALE and not checkpoint:
        print("long-run jobs always checkpoint; pass --checkpoint or set SURFTRI_CHECKPOINT_DIR",
              file=sys.stderr)
        return EXIT_USAGE
    seeds: dict = {}
    if args.seeds:
        for path in args.seeds:
            records = read_tri(path)
            if not records:
                continue
            seeds[records[0].surface_of()] = tuple(records)
    try:
        seeds = _derive_seeds(target, seeds, args)
        job = generate.GenerationJob(
            target=target,
            cap=args.max_vertices,
            seeds=seeds,
            checkpoint_dir=checkpoint,
            jobs=args.jobs,
        )
        result = generate.generate_irreducible(job)
    except TriangulationError as exc:
        if exc.code == "INCOMPLETE_SEEDS":
            print(str(exc), file=sys.stderr)
            return EXIT_SEEDS
        raise
    ordered = sorted(result, key=canonical_code)
    write_tri(args.out, ordered, header={"surface": target.name, "count": len(ordered)})
    hist = analyze.vertex_histogram(ordered)
    for line in _histogram_lines(hist):
        print(line)
    for n, k in hist.items():
        print(f"count.{n}={k}")
    print(f"total={len(ordered)}")
    return EXIT_OK


def _derive_seeds(target, seeds, args):
    """Generate any missing lower-genus seed sets (depth-first)."""
    for s in generate.required_seed_surfaces(target):
        if s in seeds:
            continue
        if s not in generate.DESK_SCALE and not args.allow_long:
            raise TriangulationError("INCOMPLETE_SEEDS", f"missing seed set for {s.name}")
        sub_seeds = _derive_seeds(s, dict(seeds), args)
        job = generate.GenerationJob(target=s, seeds=sub_seeds, jobs=args.jobs)
        seeds[s] = tuple(sorted(generate.generate_irreducible(job), key=canonical_code))
    return seeds


def cmd_verify_counts(args) -> int:
    records = read_tri(args.infile)
    hist = analyze.vertex_histogram(records)
    want: dict[int, int] = {}
    try:
        for part in args.expect.split(","):
            n, k = part.split(":")
            want[int(n)] = int(k)
    except ValueError:
        print(f"cannot parse expectation {args.expect!r}", file=sys.stderr)
        return EXIT_USAGE
    ok = hist == want
    for n in sorted(set(hist) | set(want)):
        got_n, want_n = hist.get(n, 0), want.get(n, 0)
        marker = "" if got_n == want_n else "   <- mismatch"
        print(f"{n:>3}: got {got_n:>6}  expected {want_n:>6}{marker}")
    print(f"match={'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_edge_width(args) -> int:
    records = read_tri(args.infile)
    hist: dict[tuple[int, int | None], int] = {}
    for t in records:
        try:
            w = cycletop.edge_width(t, args.max_length)
        except TriangulationError as exc:
            if exc.code != "SEARCH_EXHAUSTED":
                raise
            w = None
        key = (t.n, w)
        hist[key] = hist.get(key, 0) + 1
    widths = sorted({w for _, w in hist if w is not None})
    print("vertices | " + "  ".join(f"w={w}" for w in widths) + ("  none" if any(w is None for _, w in hist) else ""))
    for n in sorted({n for n, _ in hist}):
        row = [f"{hist.get((n, w), 0):>4}" for w in widths]
        if any(w is None for _, w in hist):
            row.append(f"{hist.get((n, None), 0):>5}")
        print(f"{n:>8} | " + "  ".join(row))
    for (n, w), k in sorted(hist.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0)):
        print(f"edgewidth.{n}.{'none' if w is None else w}={k}")
    return EXIT_OK


def cmd_classify(args) -> int:
    records = read_tri(args.infile)
    counts: dict[str, int] = {}
    for t in records:
        for c in cycletop.enumerate_cycles(t, args.cycle_length):
            cls = cycletop.classify_cycle(t, c)
            if cls.separating:
                kind = "separating-contractible" if cls.contractible else "separating-noncontractible"
            else:
                kind = f"nonseparating-{cls.sided}-sided-{cls.leaving}-leaving"
            key = f"{len(c)}.{kind}"
            counts[key] = counts.get(key, 0) + 1
    print(f"{'length.class':<50}  count")
    for key in sorted(counts):
        print(f"{key:<50}  {counts[key]}")
    for key in sorted(counts):
        print(f"cycles.{key}={counts[key]}")
    return EXIT_OK


def cmd_nsc(args) -> int:
    records = read_tri(args.infile)
    require = None
    if args.require:
        names = args.require.split(",")
        if len(names) != 2:
            print("--require wants two surface names, e.g. N1,N2", file=sys.stderr)
            return EXIT_USAGE
        require = (_surface(names[0]), _surface(names[1]))
    found = 0
    for i, t in enumerate(records):
        witness = cycletop.find_nsc_with_genera(t, args.h, require)
        status = "none" if witness is None else ",".join(map(str, witness))
        if witness is not None:
            found += 1
        print(f"record {i}: {status}")
    print(f"nsc.found={found}")
    print(f"nsc.missing={len(records) - found}")
    return EXIT_OK


def cmd_pseudo_minimal(args) -> int:
    records = read_tri(args.infile)
    yes = 0
    for i, t in enumerate(records):
        flag = analyze.is_pseudo_minimal(t)
        yes += flag
        print(f"record {i}: {'pseudo-minimal' if flag else 'not pseudo-minimal'}")
        print(f"pseudo_minimal.{i}={'true' if flag else 'false'}")
    print(f"pseudo_minimal.count={yes}")
    return EXIT_OK


def cmd_construct(args) -> int:
    genus = args.genus
    if args.family == "Ng-max":
        t = analyze.build_large_irreducible(SurfaceDescriptor(False, genus))
    elif args.family == "Sg-max":
        t = analyze.build_large_irreducible(SurfaceDescriptor(True, genus))
    elif args.family == "N3-counterexample":
        t = analyze.build_counterexample_join()
    elif args.family == "base-Bg":
        base = analyze.build_base(genus)
        t = base.completed()
    else:
        print(f"unknown family {args.family!r}", file=sys.stderr)
        return EXIT_USAGE
    write_tri(args.out, [canonical_form(t)], header={"family": args.family, "genus": genus})
    return EXIT_OK


def cmd_canon(args) -> int:
    records = read_tri(args.infile)
    write_tri(args.out, [canonical_form(t) for t in records])
    return EXIT_OK


def cmd_oracle(args) -> int:
    s = _surface(args.surface)
    result = generate.brute_force_triangulations(s, args.vertices)
    if args.irreducible:
        result = [t for t in result if is_irreducible(t)]
    write_tri(args.out, result, header={"surface": s.name, "vertices": args.vertices})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surftri", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate the irreducible triangulations of a surface")
    g.add_argument("--surface", required=True)
    g.add_argument("--max-vertices", type=int, default=None)
    g.add_argument("--out", required=True)
    g.add_argument("--checkpoint", default=None)
    g.add_argument("--jobs", type=int, default=1)
    g.add_argument("--seeds", action="append", default=[],
                   help="TRI file with the irreducible set of a lower-genus surface (repeatable)")
    g.add_argument("--allow-long", action="store_true")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify-counts", help="compare a TRI file's vertex histogram to expectations")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--expect", required=True, help="e.g. 7:1,8:4,9:15,10:1")
    v.set_defaults(func=cmd_verify_counts)

    w = sub.add_parser("edge-width", help="edge-width table (shortest noncontractible separating cycle)")
    w.add_argument("--in", dest="infile", required=True)
    w.add_argument("--max-length", type=int, default=None)
    w.set_defaults(func=cmd_edge_width)

    c = sub.add_parser("classify", help="classify all cycles up to a length")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--cycle-length", type=int, required=True)
    c.set_defaults(func=cmd_classify)

    n = sub.add_parser("nsc", help="search noncontractible separating cycles with given genera")
    n.add_argument("--in", dest="infile", required=True)
    n.add_argument("--h", type=int, required=True)
    n.add_argument("--require", default=None, help="pin the two capped surfaces, e.g. N1,N2")
    n.set_defaults(func=cmd_nsc)

    m = sub.add_parser("pseudo-minimal", help="flip-class irreducibility check per record")
    m.add_argument("--in", dest="infile", required=True)
    m.set_defaults(func=cmd_pseudo_minimal)

    k = sub.add_parser("construct", help="emit one of the explicit constructions")
    k.add_argument("--family", required=True,
                   choices=["Ng-max", "Sg-max", "N3-counterexample", "base-Bg"])
    k.add_argument("--genus", type=int, default=3)
    k.add_argument("--out", default="-")
    k.set_defaults(func=cmd_construct)

    q = sub.add_parser("canon", help="rewrite records in canonical labeling")
    q.add_argument("--in", dest="infile", required=True)
    q.add_argument("--out", default="-")
    q.set_defaults(func=cmd_canon)

    o = sub.add_parser("oracle", help="brute-force census for one surface and vertex count")
    o.add_argument("--surface", required=True)
    o.add_argument("--vertices", type=int, required=True)
    o.add_argument("--irreducible", action="store_true", help="keep only irreducible results")
    o.add_argument("--out", default="-")
    o.set_defaults(func=cmd_oracle)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except TriangulationError as exc:
        print(str(exc), file=sys.stderr)
        if exc.code == "INCOMPLETE_SEEDS":
            return EXIT_SEEDS
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
