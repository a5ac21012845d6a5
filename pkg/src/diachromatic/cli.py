"""Command-line front end.

Exit status: 0 on success, 1 when a law is violated or a requested
coloring/image does not exist, 2 on usage, file or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import families, laws
from .coloring import ColoringCertificate, format_coloring, is_acyclic_coloring, is_complete_coloring
from .digraph import DGRFormatError, Digraph, format_dgr, read_dgr
from .dihom import DihomError, image_with_dichromatic, interpolation_sequence
from .solver import (
    SOLVER_CEILING,
    diachromatic_number,
    dichromatic_number,
    greedy_coloring,
    pseudoachromatic_number,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SOLVERS = {"dc": dichromatic_number, "dac": diachromatic_number, "psi": pseudoachromatic_number}


class UsageError(Exception):
    pass


def _load(path: str) -> Digraph:
    try:
        return read_dgr(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except DGRFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit_certificate(cert: ColoringCertificate, out) -> None:
    # re-validate before anything reaches the output
    if is_acyclic_coloring(cert.digraph, cert.coloring) != cert.acyclic or (
        is_complete_coloring(cert.digraph, cert.coloring) != cert.complete
    ):
        raise AssertionError("certificate flags disagree with the coloring")
    out.write(f"# colors={cert.k} acyclic={str(cert.acyclic).lower()} complete={str(cert.complete).lower()}\n")
    out.write(format_coloring(cert.coloring))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# -- subcommands -------------------------------------------------------------


def cmd_solve(args, out, err) -> int:
    d = _load(args.file)
    if d.n > SOLVER_CEILING:
        err.write(f"warning: n={d.n} exceeds {SOLVER_CEILING}; exact solving may be slow\n")
    if d.n == 0:
        raise UsageError("digraph has no vertices")
    result = SOLVERS[args.param](d, workers=args.workers)
    out.write(f"{args.param} = {result.value}\n")
    _emit_certificate(result.certificate, out)
    return EXIT_OK


def cmd_greedy(args, out, err) -> int:
    d = _load(args.file)
    if args.order == "natural":
        order = None
    else:
        if args.sequence is None:
            raise UsageError("--order given needs --sequence")
        order = _int_list(args.sequence)
    try:
        cert = greedy_coloring(d, order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"greedy = {cert.k}\n")
    _emit_certificate(cert, out)
    return EXIT_OK


def cmd_construct(args, out, err) -> int:
    kind, _, arg = args.family.partition(":")
    try:
        if kind == "matching":
            cert = families.matching_coloring(int(arg))
        elif kind == "circulant":
            nums = _int_list(arg)
            if len(nums) < 2:
                raise UsageError("circulant needs m,j1[,j2...]")
            cert = families.circulant_coloring(families.CirculantSpec(nums[0], nums[1:]))
        elif kind == "transitive":
            cert = families.transitive_coloring(int(arg))
        elif kind == "discordant":
            if args.file is None:
                raise UsageError("discordant needs a tournament file")
            t = _load(args.file)
            if args.partition:
                cert = families.discordant_partition_coloring(t)
            else:
                res = families.discordant_subtournament(t)
                out.write(f"discordant size = {len(res.vertices)}\n")
                out.write(f"anchor = {res.anchor_arc[0]} {res.anchor_arc[1]}\n")
                out.write(f"anchor score = {res.c3} + {res.tt_star}\n")
                out.write("order = " + " ".join(map(str, res.acyclic_order)) + "\n")
                return EXIT_OK
        else:
            raise UsageError(f"unknown family {kind!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.emit_digraph:
        out.write(format_dgr(cert.digraph))
    out.write(f"k = {cert.k}\n")
    _emit_certificate(cert, out)
    return EXIT_OK


def cmd_dihom(args, out, err) -> int:
    d = _load(args.file)
    if d.n == 0:
        raise UsageError("digraph has no vertices")
    seq = interpolation_sequence(d, diachromatic_number(d, workers=args.workers).certificate)
    if args.level is not None:
        try:
            image = image_with_dichromatic(d, args.level, seq)
        except DihomError as exc:
            err.write(f"not found: {exc}\n")
            return EXIT_FAIL
        out.write(f"# image with dc = {args.level}\n")
        out.write(format_dgr(image))
        return EXIT_OK
    out.write(f"start n={d.n} dc = {dichromatic_number(d).value}\n")
    for i, (step, image) in enumerate(zip(seq.steps, seq.images[1:]), start=1):
        out.write(
            f"step {i}: identify {step.u_label} into {step.v_label} "
            f"n={image.n} dc = {dichromatic_number(image).value}\n"
        )
    out.write(f"target K_{seq.target.n}\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    ids = list(laws.LAWS) if args.laws == "all" else [x for x in args.laws.split(",") if x]
    unknown = [x for x in ids if x not in laws.LAWS]
    if unknown:
        raise UsageError(f"unknown law ids: {', '.join(unknown)}")
    corpus: list[Digraph] = []
    for spec in args.corpus:
        try:
            corpus.extend(laws.parse_corpus(spec))
        except (laws.CorpusSpecError, DGRFormatError) as exc:
            raise UsageError(str(exc)) from None
    reports = laws.run_laws(ids, corpus)
    for r in reports:
        out.write(r.line() + "\n")
        for v in r.violations[: args.show]:
            arcs = " ".join(f"{a}{b}" for a, b in v.digraph.sorted_arcs())
            out.write(f"  #{v.index} n={v.digraph.n} arcs=[{arcs}] {v.values}\n")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.summary() for r in reports], fh, indent=2)
            fh.write("\n")
    return EXIT_FAIL if laws.failing(reports) else EXIT_OK


def cmd_gen(args, out, err) -> int:
    kind, _, arg = args.family.partition(":")
    try:
        if kind == "transitive":
            d = families.transitive_tournament(int(arg))
        elif kind == "matching":
            d = families.oriented_matching(int(arg))
        elif kind == "complete":
            d = families.complete_symmetric(int(arg))
        elif kind == "circulant":
            nums = _int_list(arg)
            d = families.circulant_tournament(families.CirculantSpec(nums[0], nums[1:]))
        elif kind == "random-tournament":
            d = families.random_tournament(int(arg), args.seed)
        elif kind == "random":
            n, p = arg.split(",")
            d = families.random_digraph(int(n), float(p), args.seed)
        else:
            raise UsageError(f"unknown family {kind!r}")
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad family spec {args.family!r}: {exc}") from None
    text = format_dgr(d)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diachromatic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute dc, dac or psi exactly")
    s.add_argument("--param", choices=sorted(SOLVERS), required=True)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("file")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("greedy", help="greedy complete acyclic coloring")
    s.add_argument("--order", choices=["natural", "given"], default="natural")
    s.add_argument("--sequence", help="comma-separated vertex order for --order given")
    s.add_argument("file")
    s.set_defaults(func=cmd_greedy)

    s = sub.add_parser("construct", help="explicit colorings of the named families")
    s.add_argument("--family", required=True, help="matching:m | circulant:m,j1,... | transitive:n | discordant")
    s.add_argument("--partition", action="store_true", help="discordant: color by repeated extraction")
    s.add_argument("--emit-digraph", action="store_true", help="print the family digraph first")
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("dihom", help="interpolation sequence down to K_dac")
    s.add_argument("--level", type=int, help="print an image whose dc equals this value")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("file")
    s.set_defaults(func=cmd_dihom)

    s = sub.add_parser("verify", help="check inequalities over a corpus")
    s.add_argument("--laws", default="all", help="comma-separated law ids or 'all'")
    s.add_argument("--corpus", nargs="+", required=True)
    s.add_argument("--json", help="write a machine-readable summary here")
    s.add_argument("--show", type=int, default=3, help="violations printed per law")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="write a family member in DGR format")
    s.add_argument("--family", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
