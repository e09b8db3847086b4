"""Command implementations shared by the CLI and the corpus runner.

Each command takes a ring handle and plain arguments and returns a report
dict with ``verdict``, ``evidence``, ``certification`` and ``paper_case``.
"""

from __future__ import annotations

import numpy as np

from .artin import FGModule, FiniteLocalAlgebra, from_presentation
from .complexes import koszul
from .criteria import (
    CheckReport,
    _jsonable,
    cyclic_quotient,
    gorenstein_ring_test,
    gp_dg_module_checks,
    is_exact_element,
    is_exact_sequence,
    is_graded,
    koszul_augmentation_qg,
    quasi_gorenstein_direct,
    quotient_ring,
    tensor_resolution_construction,
    top_bottom_criterion,
    trivial_ext_checks,
)
from .graded import GradedQuotientRing, minimal_ideal_generators
from .groebner import pfaffian_ideal, vec_to_polys
from .poly import PolynomialRing, split_top_level
from .resolutions import (
    DEFAULT_CUTOFF,
    bass_prefix,
    detect_periodicity,
    ext_profile,
    poincare_prefix,
    resolve_minimal,
)

CHECKS = ("exact-element", "exact-sequence", "ezd", "gorenstein", "quasi-gorenstein", "koszul-augmentation", "top-bottom")


class CommandError(ValueError):
    """Bad arguments for a command (a usage error, not an engine failure)."""


def parse_sequence(text: str | None, sequences: dict | None = None) -> list[str]:
    """``x,y,z`` or ``@name`` for a sequence declared in the ring file."""
    if text is None:
        return []
    text = text.strip()
    if text.startswith("@"):
        name = text[1:]
        if not sequences or name not in sequences:
            raise CommandError(f"no sequence named {name!r} in the ring file")
        return list(sequences[name])
    if text in ("", "0"):
        return []
    return [s.strip() for s in split_top_level(text) if s.strip()]


def module_from_arg(ring, spec: str | None, sequences=None):
    """``k`` residue field, ``A`` (or empty) the ring, otherwise A/(ideal)."""
    if spec is None or spec.strip() in ("", "A", "R"):
        return cyclic_quotient(ring, [])
    if spec.strip() == "k":
        gens = ring.poly_ring.gens() if is_graded(ring) else [ring.basis_elt(i) for i in range(1, ring.dim)]
        return cyclic_quotient(ring, gens)
    return cyclic_quotient(ring, parse_sequence(spec, sequences))


def _report(command: str, verdict: str, evidence: dict, certification: str = "certified", paper_case=None) -> dict:
    return {
        "command": command,
        "verdict": verdict,
        "evidence": _jsonable(evidence),
        "certification": certification,
        "paper_case": paper_case,
    }


def _from_check(command: str, rep: CheckReport) -> dict:
    return _report(command, rep.verdict, rep.evidence, rep.certification, rep.paper_case)


def run_check(ring, kind: str, arg: str | None = None, *, quotient: str | None = None, cutoff: int = DEFAULT_CUTOFF, sequences=None) -> dict:
    cmd = f"check {kind}" + (f" {arg}" if arg else "")
    if kind not in CHECKS:
        raise CommandError(f"unknown check {kind!r}; expected one of {', '.join(CHECKS)}")
    if kind == "gorenstein":
        target = quotient_ring(ring, parse_sequence(quotient, sequences)) if quotient else ring
        return _from_check(cmd, gorenstein_ring_test(target))
    if arg is None:
        raise CommandError(f"check {kind} needs an argument")
    if kind in ("exact-element", "ezd"):
        rep = is_exact_element(ring, arg)
        if kind == "ezd":
            v = "yes" if rep.evidence.get("kind") == "exact zero divisor" else "no"
            return _report(cmd, v, rep.evidence)
        return _from_check(cmd, rep)
    seq = parse_sequence(arg, sequences)
    if kind == "exact-sequence":
        return _from_check(cmd, is_exact_sequence(ring, seq))
    if kind == "quasi-gorenstein":
        return _from_check(cmd, quasi_gorenstein_direct(ring, seq, cutoff))
    if kind == "koszul-augmentation":
        return _from_check(cmd, koszul_augmentation_qg(ring, seq))
    return _from_check(cmd, top_bottom_criterion(koszul(ring, seq)))


def _vec_str(v, rank, ring) -> str:
    polys = vec_to_polys(v, rank, ring.poly_ring)
    return "(" + ", ".join(str(p) for p in polys) + ")"


def koszul_homology(ring, seq_text: str, sequences=None) -> dict:
    seq = parse_sequence(seq_text, sequences)
    K = koszul(ring, seq)
    table = {}
    for i in K.degrees:
        H = K.homology(i)
        if is_graded(ring):
            gens = H.minimal_generators()
            ann = minimal_ideal_generators(ring, H.annihilator().generators) if gens else []
            table[i] = {
                "zero": not gens,
                "generators": [_vec_str(g, H.rank, ring) for g in gens],
                "annihilator": [str(a) for a in ann] if gens else ["1"],
            }
        else:
            table[i] = {
                "dim": H.dim,
                "num_generators": H.num_generators if H.dim else 0,
                "annihilator_dim": H.annihilator().dim,
            }
    amp = K.sup_inf_amp()
    ev = {"ranks": K.ranks(), "homology": table, "sup": amp.sup, "inf": amp.inf, "amp": amp.amp}
    return _report(f"koszul homology {seq_text}", "computed", ev)


def _cert(res):
    c = detect_periodicity(res)
    return None if c is None else {"kind": c.kind, "period": c.period, "onset": c.onset}


def resolve(ring, module: str | None, length: int, sequences=None) -> dict:
    M = module_from_arg(ring, module, sequences)
    res = resolve_minimal(M, length)
    ev = {"betti": res.betti, "terminated": res.terminated, "certificate": _cert(res), "minimal": res.is_minimal()}
    if res.graded:
        ev["shifts"] = res.shifts
    return _report(f"resolve {module or 'A'}", "computed", ev)


def ext_or_tor(ring, which: str, module: str | None, target: str | None, cutoff: int, sequences=None) -> dict:
    M = module_from_arg(ring, module, sequences)
    N = module_from_arg(ring, target, sequences)
    if which == "ext":
        prof = ext_profile(M, N, cutoff)
        ev = {"values": prof.values, "nonzero_degrees": prof.nonzero_degrees()}
        c = prof.certificate
        ev["certificate"] = None if c is None else {"kind": c.kind, "period": c.period, "onset": c.onset}
        last = prof.nonzero_degrees()
        ev["tail_certified_zero"] = prof.tail_certified_zero((max(last) + 1) if last else 0)
    else:
        from .resolutions import tor_module

        res = resolve_minimal(M, cutoff + 1)
        vals = []
        for i in range(cutoff + 1):
            X = tor_module(res, N, i)
            vals.append(X.dim if isinstance(X, FGModule) else (not X.is_zero()))
        ev = {"values": vals, "certificate": _cert(res)}
    cert = "certified" if ev.get("certificate") else "inconclusive-up-to-cutoff"
    return _report(f"{which} {module or 'A'} {target or 'A'}", "computed", ev, cert)


def series(ring, which: str, module: str | None, length: int, sequences=None) -> dict:
    M = module_from_arg(ring, module, sequences)
    s = poincare_prefix(M, length) if which == "poincare" else bass_prefix(M, length)
    ev = {"coefficients": list(s.coefficients), "certified_complete": s.certified_complete, "period": s.period, "onset": s.onset}
    return _report(f"{which} {module or 'A'}", "computed", ev, "certified" if s.certified_complete else "inconclusive-up-to-cutoff")


def generic_alternating_matrix(P: PolynomialRing, size: int, seed: int = 0):
    """Alternating matrix with random linear entries (deterministic in the seed)."""
    rng = np.random.default_rng(seed)
    F = P.field
    p = getattr(F, "p", 101)
    m = [[P.zero() for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            e = P.zero()
            for v in P.gens():
                e = e + v * P.const(int(rng.integers(0, p)))
            m[i][j] = e
            m[j][i] = -e
    return m


def pfaffian_command(ring, size: int = 5, seed: int = 0) -> dict:
    P: PolynomialRing = ring.poly_ring
    m = generic_alternating_matrix(P, size, seed)
    gens = pfaffian_ideal(m)
    S = GradedQuotientRing(P, [])
    mingens = minimal_ideal_generators(S, gens)
    R = GradedQuotientRing(P, gens)
    ev = {
        "matrix": [[str(e) for e in row] for row in m],
        "pfaffians": [str(g) for g in gens],
        "minimal_generators": len(mingens),
        "ambient_dim": P.nvars,
        "krull_dim": R.krull_dim,
        "artinian": R.is_artinian(),
        "complete_intersection": len(mingens) == P.nvars - R.krull_dim,
    }
    verdict = "unknown"
    if R.is_artinian():
        A = from_presentation(P, gens)
        ev["dim"] = A.dim
        ev["socle_dim"] = A.socle.dim
        ev["hilbert"] = R.hilbert_prefix(4)
        verdict = "yes" if A.socle.dim == 1 else "no"
    else:
        verdict = gorenstein_ring_test(R).verdict
    return _report(f"pfaffian-ideal size={size} seed={seed}", verdict, ev)


def trivial_extension_command(ring, module: str = "dual", cutoff: int = DEFAULT_CUTOFF) -> dict:
    if not isinstance(ring, FiniteLocalAlgebra):
        raise CommandError("trivial-extension needs a finite-dimensional ring")
    D = None if module == "dual" else ring.regular_module()
    return _from_check(f"trivial-extension {module}", trivial_ext_checks(ring, D, cutoff))


def tensor_resolution_command(ring, I: str | None, J: str | None, length: int, cutoff: int, sequences=None) -> dict:
    _, rep = tensor_resolution_construction(ring, parse_sequence(I, sequences), parse_sequence(J, sequences), length, cutoff)
    return _from_check(f"tensor-resolution {I or '0'} {J or '0'}", rep)


def gp_checks_command(ring, seq_text: str, module: str | None, cutoff: int, sequences=None) -> dict:
    seq = parse_sequence(seq_text, sequences)
    M = module_from_arg(ring, module, sequences)
    return _from_check(f"gp-checks {seq_text} {module or 'A'}", gp_dg_module_checks(ring, seq, M, cutoff))


def define(ring) -> dict:
    from .ringfile import describe_ring

    return _report("define", "computed", describe_ring(ring))


__all__ = [
    "CHECKS",
    "CommandError",
    "define",
    "ext_or_tor",
    "generic_alternating_matrix",
    "gp_checks_command",
    "koszul_homology",
    "module_from_arg",
    "parse_sequence",
    "pfaffian_command",
    "resolve",
    "run_check",
    "series",
    "tensor_resolution_command",
    "trivial_extension_command",
]
