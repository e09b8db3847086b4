"""qgkit command-line front end.

Exit codes: 0 a verdict was produced (even "no"), 1 usage error,
2 engine error, 3 corpus mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import commands as C
from .artin import AlgebraError
from .complexes import ComplexError
from .graded import InhomogeneousError, NotArtinianError
from .poly import ParseError
from .resolutions import DEFAULT_CUTOFF, ResolutionTooShort
from .ringfile import RingFileError, parse_ring_file, parse_ring_text

EXIT_OK, EXIT_USAGE, EXIT_ENGINE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ring_options(p: argparse.ArgumentParser):
    g = p.add_argument_group("ring")
    g.add_argument("--ring", "-r", metavar="FILE", help="ring presentation file")
    g.add_argument("--vars", help="inline variables, e.g. x,y,z")
    g.add_argument("--relations", default="", help="inline relations, e.g. 'x^2, x*y'")
    g.add_argument("--field", default="101", help="prime or QQ (inline rings only)")
    g.add_argument("--engine", choices=("graded", "artinian"), help="force an engine")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    _ring_options(common)
    common.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF, help="Ext/resolution cutoff (default 10)")
    common.add_argument("--timings", action="store_true", help="add wall-clock timings to the report")
    common.add_argument("--output", "-o", metavar="FILE", help="write the report here instead of stdout")
    common.add_argument("--text", action="store_true", help="human-readable rendering")

    p = _Parser(prog="qgkit", description="Exact zero divisors, quasi-Gorenstein maps and Koszul complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("define", parents=[common], help="parse a ring and summarize it")

    ck = sub.add_parser("check", parents=[common], help="run a decision procedure")
    ck.add_argument("kind", choices=C.CHECKS)
    ck.add_argument("arg", nargs="?", help="element, sequence (x,y,z or @name) or ideal")
    ck.add_argument("--quotient", help="for gorenstein: test A/(this sequence)")

    kz = sub.add_parser("koszul", parents=[common], help="Koszul complex computations")
    kz.add_argument("what", choices=("homology",))
    kz.add_argument("seq")

    rs = sub.add_parser("resolve", parents=[common], help="minimal free resolution of A/I")
    rs.add_argument("--module", "-m", help="ideal I (comma list), 'k' or 'A'")
    rs.add_argument("--length", type=int, default=6)

    for name in ("ext", "tor"):
        e = sub.add_parser(name, parents=[common], help=f"{name.capitalize()}(A/I, A/J) for degrees 0..cutoff")
        e.add_argument("--module", "-m", help="ideal I, 'k' or 'A'")
        e.add_argument("--target", "-t", help="ideal J, 'k' or 'A' (default A)")

    for name in ("poincare", "bass"):
        s = sub.add_parser(name, parents=[common], help=f"{name} series prefix of A/I")
        s.add_argument("--module", "-m", help="ideal I, 'k' or 'A'")
        s.add_argument("--length", type=int, default=6)

    pf = sub.add_parser("pfaffian-ideal", parents=[common], help="sub-maximal pfaffians of a generic alternating matrix")
    pf.add_argument("--size", type=int, default=5)
    pf.add_argument("--seed", type=int, default=0)

    te = sub.add_parser("trivial-extension", parents=[common], help="A ⋉ D for D the dual or the ring")
    te.add_argument("--module", choices=("dual", "regular"), default="dual")

    tr = sub.add_parser("tensor-resolution", parents=[common], help="tensor product of the resolutions of A/I and A/J")
    tr.add_argument("--I", dest="ideal_i", default="")
    tr.add_argument("--J", dest="ideal_j", default="")
    tr.add_argument("--length", type=int, default=4)

    gp = sub.add_parser("gp-checks", parents=[common], help="amplitude and G-dimension checks over a Koszul complex")
    gp.add_argument("seq")
    gp.add_argument("--module", "-m", help="ideal I (module A/I), 'k' or 'A'")

    co = sub.add_parser("corpus", help="run the example corpus")
    co.add_argument("what", choices=("run", "list"))
    co.add_argument("file", nargs="?", help="JSON corpus file (default: built-in corpus)")
    co.add_argument("--jobs", "-j", type=int, default=1)
    co.add_argument("--output", "-o", metavar="FILE")
    co.add_argument("--text", action="store_true")
    co.add_argument("--timings", action="store_true")
    return p


def load_ring(ns):
    if ns.ring:
        pres = parse_ring_file(ns.ring)
    elif ns.vars:
        text = f"field: {ns.field}\nvars: {ns.vars}\n"
        if ns.relations.strip():
            text += f"relations: {ns.relations}\n"
        pres = parse_ring_text(text)
    else:
        raise UsageError("a ring is required: --ring FILE or --vars ... [--relations ...]")
    return pres.build(ns.engine), pres


def execute(ns, ring, pres) -> dict:
    seqs = pres.sequences if pres is not None else {}
    cmd = ns.command
    if cmd == "define":
        return C.define(ring)
    if cmd == "check":
        return C.run_check(ring, ns.kind, ns.arg, quotient=ns.quotient, cutoff=ns.cutoff, sequences=seqs)
    if cmd == "koszul":
        return C.koszul_homology(ring, ns.seq, seqs)
    if cmd == "resolve":
        return C.resolve(ring, ns.module, ns.length, seqs)
    if cmd in ("ext", "tor"):
        return C.ext_or_tor(ring, cmd, ns.module, ns.target, ns.cutoff, seqs)
    if cmd in ("poincare", "bass"):
        return C.series(ring, cmd, ns.module, ns.length, seqs)
    if cmd == "pfaffian-ideal":
        return C.pfaffian_command(ring, ns.size, ns.seed)
    if cmd == "trivial-extension":
        return C.trivial_extension_command(ring, ns.module, ns.cutoff)
    if cmd == "tensor-resolution":
        return C.tensor_resolution_command(ring, ns.ideal_i, ns.ideal_j, ns.length, ns.cutoff, seqs)
    if cmd == "gp-checks":
        return C.gp_checks_command(ring, ns.seq, ns.module, ns.cutoff, seqs)
    raise UsageError(f"unknown command {cmd!r}")


def render_text(report: dict) -> str:
    lines = [f"{report.get('command', '')}: {report['verdict']} ({report.get('certification', '')})"]
    if report.get("paper_case"):
        lines.append(f"  case: {report['paper_case']}")
    for k in sorted(report.get("evidence", {})):
        lines.append(f"  {k}: {json.dumps(report['evidence'][k], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def emit(report: dict, ns) -> None:
    out = render_text(report) if getattr(ns, "text", False) else json.dumps(report, sort_keys=True, indent=2) + "\n"
    if getattr(ns, "output", None):
        with open(ns.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


ENGINE_ERRORS = (
    AlgebraError,
    ComplexError,
    InhomogeneousError,
    NotArtinianError,
    ParseError,
    RingFileError,
    ResolutionTooShort,
    C.CommandError,
    OSError,
    ValueError,
)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    try:
        if ns.command == "corpus":
            from .corpus import main_corpus

            return main_corpus(ns)
        t0 = time.perf_counter()
        ring, pres = load_ring(ns)
        report = execute(ns, ring, pres)
        if ns.timings:
            report["timings"] = {"seconds": round(time.perf_counter() - t0, 3)}
        emit(report, ns)
        return EXIT_OK
    except UsageError as exc:
        sys.stderr.write(f"qgkit: {exc}\n")
        return EXIT_USAGE
    except C.CommandError as exc:
        sys.stderr.write(f"qgkit: {exc}\n")
        return EXIT_USAGE
    except ENGINE_ERRORS as exc:
        sys.stderr.write(f"qgkit: error: {exc}\n")
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
