"""Command line interface: recognize, verify, family, oracle.

Exit codes are the machine contract: 0 for the positive outcome, 1 for the
negative one, 2 for malformed input or violated size caps. Diagnostics go
to stderr; stdout carries only requested artifacts (ASCII grids, tables).
"""

from __future__ import annotations

import argparse
import os
import sys

from .blocks import decompose, validate_block_graph
from .certify import verify_certificate
from .family import check_minimality, check_proposition, enumerate_family
from .graphs import Graph, GraphInputError
from .grid import GridRepresentation
from .io import (
    GraphFileError,
    certificate_to_json,
    parse_graph_file,
    representation_from_json,
    representation_to_json,
    witness_to_json,
    write_graph_file,
)
from .recognize import Accept, NotBlockGraph, Reject, recognize
from .render import ascii_render, render_figure
from .verify import (
    ORACLE_MAX_VERTICES,
    brute_force_b0vpg,
    find_induced_f_member,
    full_structural_check,
)


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_file(fh.read())


def _load_representation(path: str) -> GridRepresentation:
    with open(path, "r", encoding="utf-8") as fh:
        return representation_from_json(fh.read())


def _write(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content)


def cmd_recognize(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, GraphFileError) as exc:
        _err(f"error: {exc}")
        return 2
    result = recognize(g, seed=args.seed, start_block=args.start_block)
    if isinstance(result, Accept):
        rep = result.representation
        _err(f"accept: {g.n} vertices represented on a {rep.rows}x{rep.cols} grid")
        if args.out:
            _write(args.out, representation_to_json(rep))
        if args.ascii:
            sys.stdout.write(ascii_render(rep))
        if args.figure:
            render_figure(rep, args.figure, title=os.path.basename(args.input))
        return 0
    if isinstance(result, Reject):
        cert = result.certificate
        _err(
            f"reject: vertices {[v + 1 for v in cert.vertices]} induce a forbidden "
            f"member (k={cert.family_k})"
        )
        if args.out:
            _write(args.out, certificate_to_json(cert))
        return 1
    witness = result.witness
    _err(
        f"not a block graph: block {sorted(v + 1 for v in witness.block)} "
        f"misses the edge {witness.nonadjacent[0] + 1}-{witness.nonadjacent[1] + 1}"
    )
    if args.out:
        _write(args.out, witness_to_json(witness))
    return 1


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.graph)
        rep = _load_representation(args.representation)
    except (OSError, GraphFileError) as exc:
        _err(f"error: {exc}")
        return 2
    try:
        report = full_structural_check(g, rep)
    except GraphInputError as exc:
        _err(f"error: {exc}")
        return 2
    for u, v in report.adjacent_disjoint:
        _err(f"adjacent but disjoint: {u + 1} {v + 1}")
    for u, v in report.nonadjacent_intersecting:
        _err(f"nonadjacent but intersecting: {u + 1} {v + 1}")
    for failure in report.lemma_failures:
        _err(f"structural check failed: {failure}")
    if report.ok:
        _err("representation verified")
        return 0
    return 1


def cmd_family(args: argparse.Namespace) -> int:
    if args.k is not None and args.max_vertices is not None:
        _err("error: --k and --max-vertices are mutually exclusive")
        return 2
    if args.k is not None:
        members = [
            m for m in enumerate_family(9 * (args.k + 1) + 1)
            if m.n == 9 * (args.k + 1) + 1
        ]
    else:
        bound = args.max_vertices if args.max_vertices is not None else 10
        if bound < 10:
            _err("error: the smallest member has 10 vertices")
            return 2
        members = enumerate_family(bound)

    os.makedirs(args.out_dir, exist_ok=True)
    index: dict[int, int] = {}
    for member in members:
        i = index.get(member.n, 0)
        index[member.n] = i + 1
        name = f"member_{member.n:03d}_{i:02d}.gr"
        k = (member.n - 1) // 9 - 1
        _write(
            os.path.join(args.out_dir, name),
            write_graph_file(member, comment=f"forbidden family member, k={k}"),
        )
        _err(f"wrote {os.path.join(args.out_dir, name)}")

    if args.check:
        rows = ["k\tmembers\tvertices\tblocks\tendblocks\talmost_endblocks"
                "\tinternal_blocks\tcutpoints\tcutpoints_3\tcutpoints_2"
                "\tproposition_ok\tminimal"]
        by_k: dict[int, list[Graph]] = {}
        for member in members:
            by_k.setdefault((member.n - 1) // 9 - 1, []).append(member)
        for k in sorted(by_k):
            group = by_k[k]
            minimal = all(check_minimality(m, find_induced_f_member) for m in group)
            if k == 0:
                d = decompose(group[0])
                rows.append(
                    f"0\t{len(group)}\t10\t{len(d.blocks)}\t-\t-\t-"
                    f"\t{len(d.cutpoints)}\t-\t-\t-\t{minimal}"
                )
                continue
            reports = [check_proposition(m, k) for m in group]
            ok = all(r.ok for r in reports)
            c = reports[0].counts
            rows.append(
                f"{k}\t{len(group)}\t{c['vertices']}\t{c['blocks']}\t{c['endblocks']}"
                f"\t{c['almost_endblocks']}\t{c['internal_blocks']}\t{c['cutpoints']}"
                f"\t{c['cutpoints_3']}\t{c['cutpoints_2']}\t{ok}\t{minimal}"
            )
        sys.stdout.write("\n".join(rows) + "\n")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, GraphFileError) as exc:
        _err(f"error: {exc}")
        return 2
    if g.n > ORACLE_MAX_VERTICES:
        _err(
            f"error: the exhaustive search is capped at {ORACLE_MAX_VERTICES} vertices; "
            "use 'recognize' for block graphs of any size"
        )
        return 2
    rep = brute_force_b0vpg(g)
    if rep is None:
        _err("exhausted: no representation exists")
        return 1
    _err(f"found a representation on a {rep.rows}x{rep.cols} grid")
    if args.out:
        _write(args.out, representation_to_json(rep))
    if args.ascii:
        sys.stdout.write(ascii_render(rep))
    if args.figure:
        render_figure(rep, args.figure, title=os.path.basename(args.input))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockvpg",
        description="Certifying recognition of bend-free grid-path graphs "
        "within block graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rec = sub.add_parser("recognize", help="decide a graph file, emit a witness")
    p_rec.add_argument("input", help="graph file (p/e format, 1-indexed)")
    p_rec.add_argument("--out", help="write representation or certificate JSON here")
    p_rec.add_argument("--ascii", action="store_true", help="print an ASCII grid on accept")
    p_rec.add_argument("--figure", help="render the representation to this image file")
    p_rec.add_argument("--seed", type=int, help="randomize traversal tie-breaking")
    p_rec.add_argument("--start-block", type=int, help="override the starting block index")
    p_rec.set_defaults(func=cmd_recognize)

    p_ver = sub.add_parser("verify", help="check a representation against a graph")
    p_ver.add_argument("graph")
    p_ver.add_argument("representation")
    p_ver.set_defaults(func=cmd_verify)

    p_fam = sub.add_parser("family", help="write forbidden family members as graph files")
    p_fam.add_argument("--k", type=int, help="members built with exactly k applications")
    p_fam.add_argument("--max-vertices", type=int, help="all members up to this size")
    p_fam.add_argument("--out-dir", default=".", help="directory for the graph files")
    p_fam.add_argument(
        "--check",
        action="store_true",
        help="audit structure and minimality; print a TSV table",
    )
    p_fam.set_defaults(func=cmd_family)

    p_orc = sub.add_parser("oracle", help="exhaustive search on a small graph")
    p_orc.add_argument("input")
    p_orc.add_argument("--out", help="write the found representation JSON here")
    p_orc.add_argument("--ascii", action="store_true")
    p_orc.add_argument("--figure", help="render the found representation to this file")
    p_orc.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
