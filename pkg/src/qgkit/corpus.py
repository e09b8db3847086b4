"""Regression corpus of worked examples, each with its expected verdict.

A corpus file is a JSON list of cases::

    {"id": "...", "ring": "<ring file text>", "args": ["check", "gorenstein"],
     "expect": "yes", "paper_case": "..."}

``args`` is a command line without the ring options.
"""

from __future__ import annotations

import json
import shlex
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

DIM8 = "field: 101\nvars: x, y, z\nrelations: x^2, y^2 + x*z, z^2\n"
POLY2 = "field: 101\nvars: x, y\n"
NODE = "field: 101\nvars: x, y\nrelations: x*y\n"
EMBEDDED = "field: 101\nvars: x, y\nrelations: x^2, x*y\n"
PLANE_LINE = "field: 101\nvars: x, y, z\nrelations: x*y, x*z\n"


def _case(cid, ring, cmd, expect, label):
    return {"id": cid, "ring": ring, "args": shlex.split(cmd), "expect": expect, "paper_case": label}


BUILTIN = [
    # exact sequence in a Gorenstein ring of length 8
    _case("dim8-exact-sequence-xyz", DIM8, "check exact-sequence x,y,z", "yes", "exact sequence x,y,z"),
    _case("dim8-exact-sequence-yxz", DIM8, "check exact-sequence y,x,z", "no", "reordered sequence y,x,z"),
    _case("dim8-gorenstein", DIM8, "check gorenstein", "yes", "exact sequence x,y,z"),
    _case("dim8-gorenstein-mod-x", DIM8, "check gorenstein --quotient x", "yes", "exact sequence x,y,z"),
    _case("dim8-gorenstein-mod-xy", DIM8, "check gorenstein --quotient x,y", "yes", "exact sequence x,y,z"),
    _case("dim8-gorenstein-mod-xyz", DIM8, "check gorenstein --quotient x,y,z", "yes", "exact sequence x,y,z"),
    _case("dim8-gorenstein-mod-y", DIM8, "check gorenstein --quotient y", "no", "quotient by y is not Gorenstein"),
    _case("dim8-qg-mod-x", DIM8, "check quasi-gorenstein x", "yes", "exact zero divisor x"),
    _case("dim8-qg-mod-y", DIM8, "check quasi-gorenstein y", "no", "quotient by y is not quasi-Gorenstein"),
    _case("dim8-ezd-y", DIM8, "check ezd y", "no", "y is not an exact zero divisor"),
    _case("dim8-koszul-augmentation-xyz", DIM8, "check koszul-augmentation x,y,z", "yes", "augmentation of an exact sequence"),
    _case("dim8-top-bottom-xyz", DIM8, "check top-bottom x,y,z", "criterion-passes", "augmentation of an exact sequence"),
    _case("dim8-gp-checks-xyz-k", DIM8, "gp-checks x,y,z --module k", "yes", "amplitude n for exact zero divisors"),
    # Koszul complex on x^2, xy in a polynomial ring
    _case("poly2-augmentation-x2-xy", POLY2, "check koszul-augmentation x^2,x*y", "no", "Koszul complex on x^2, xy"),
    _case("poly2-top-bottom-x2-xy", POLY2, "check top-bottom x^2,x*y", "obstruction-found", "Koszul complex on x^2, xy"),
    _case("embedded-point-gorenstein", EMBEDDED, "check gorenstein", "no", "Koszul complex on x^2, xy"),
    _case("poly2-regular-qg", POLY2, "check quasi-gorenstein x,y", "yes", "regular sequence"),
    # the node k[x,y]/(xy)
    _case("node-exact-element-x", NODE, "check exact-element x", "yes", "Koszul complex on x over k[x,y]/(xy)"),
    _case("node-augmentation-x", NODE, "check koszul-augmentation x", "yes", "Koszul complex on x over k[x,y]/(xy)"),
    _case("node-gorenstein", NODE, "check gorenstein", "yes", "Gorenstein projective module over the node"),
    _case("node-gp-checks-x", NODE, "gp-checks x --module x", "yes", "Gorenstein projective module over the node"),
    # a plane with a line through it
    _case("plane-line-exact-sequence-yz", PLANE_LINE, "check exact-sequence y,z", "no", "converse of the annihilator criterion fails"),
    _case("plane-line-top-bottom-yz", PLANE_LINE, "check top-bottom y,z", "criterion-passes", "converse of the annihilator criterion fails"),
    _case("plane-line-gorenstein", PLANE_LINE, "check gorenstein", "no", "converse of the annihilator criterion fails"),
    _case("plane-line-gorenstein-mod-yz", PLANE_LINE, "check gorenstein --quotient y,z", "yes", "converse of the annihilator criterion fails"),
]


# finite-dimensional local rings used for randomized cross-checks
ARTINIAN_RINGS = {
    "dim8": ("x, y, z", "x^2, y^2 + x*z, z^2"),
    "square-zero": ("x, y", "x^2, x*y, y^2"),
    "ci-2-2": ("x, y", "x^2, y^2"),
    "ci-2-3": ("x, y", "x^2, y^3"),
    "exterior-3": ("x, y, z", "x^2, y^2, z^2"),
    "non-gorenstein-3": ("x, y", "x^2, x*y, y^3"),
    "h131": ("x, y, z", "x*y, x*z, y*z, x^2 - y^2, x^2 - z^2"),
    "truncated-4": ("x", "x^4"),
}

_ring_cache: dict = {}


def artinian_ring(name: str):
    if name not in _ring_cache:
        from .ringfile import ring_from_text

        v, r = ARTINIAN_RINGS[name]
        _ring_cache[name] = ring_from_text(f"field: 101\nvars: {v}\nrelations: {r}\n")
    return _ring_cache[name]


def random_element(A, rng, style: str | None = None):
    """A random element of the maximal ideal: a variable, a linear form, a monomial or anything."""
    F = A.field
    style = style or rng.choice(["variable", "linear", "monomial", "generic"])
    v = F.zeros(A.dim)
    gens = [i for i, lab in enumerate(A.labels) if lab in A.poly_ring.variables] if A.poly_ring else list(range(1, A.dim))
    if style == "variable":
        v[int(rng.choice(gens))] = 1
    elif style == "linear":
        for i in gens:
            v[i] = int(rng.integers(0, 101)) % getattr(F, "p", 101)
    elif style == "monomial":
        v[int(rng.integers(1, A.dim))] = 1
    else:
        v[1:] = rng.integers(0, 101, A.dim - 1) % getattr(F, "p", 101)
    return v


def random_sequence(A, rng, length: int, tries: int = 20) -> list:
    """Elements of m, each nonzero modulo the previous ones (as algebra vectors)."""
    from .criteria import RingTower

    seq: list = []
    for _ in range(length):
        tower = RingTower(A, seq)
        S = tower.stage(len(seq))
        if S.dim == 1:
            break
        for _ in range(tries):
            x = random_element(A, rng)
            if not S.is_zero(tower.element(len(seq), x)):
                seq.append(x)
                break
        else:
            break
    return seq


@dataclass
class CaseResult:
    id: str
    expect: str
    got: str | None
    ok: bool
    error: str | None = None
    seconds: float = 0.0

    def as_dict(self, timings: bool = False) -> dict:
        d = {"id": self.id, "expect": self.expect, "got": self.got, "ok": self.ok}
        if self.error:
            d["error"] = self.error
        if timings:
            d["seconds"] = round(self.seconds, 3)
        return d


def run_case(case: dict) -> CaseResult:
    from .cli import build_parser, execute
    from .ringfile import parse_ring_text

    t0 = time.perf_counter()
    try:
        pres = parse_ring_text(case["ring"])
        ns = build_parser().parse_args(list(case["args"]))
        report = execute(ns, pres.build(getattr(ns, "engine", None)), pres)
        got = report["verdict"]
        return CaseResult(case["id"], case["expect"], got, got == case["expect"], seconds=time.perf_counter() - t0)
    except Exception as exc:  # a crashing case is a mismatch, not a crash of the run
        return CaseResult(case["id"], case["expect"], None, False, f"{type(exc).__name__}: {exc}", time.perf_counter() - t0)


def load_corpus(path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if not text.strip():
        return []
    data = json.loads(text)
    if isinstance(data, dict):
        data = data.get("cases", [])
    return list(data)


def run_corpus(cases: list[dict], jobs: int = 1) -> list[CaseResult]:
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(run_case, cases))
    return [run_case(c) for c in cases]


def summarize(results: list[CaseResult], timings: bool = False) -> dict:
    bad = [r.id for r in results if not r.ok]
    verdict = "pass" if not bad else "fail"
    ev = {"cases": [r.as_dict(timings) for r in results], "total": len(results), "failed": bad}
    if not results:
        ev["warning"] = "empty corpus: vacuous pass"
    return {"command": "corpus run", "verdict": verdict, "evidence": ev, "certification": "certified", "paper_case": None}


def main_corpus(ns) -> int:
    from .cli import EXIT_MISMATCH, EXIT_OK, emit

    cases = load_corpus(ns.file) if ns.file else BUILTIN
    if ns.what == "list":
        emit({"command": "corpus list", "verdict": "computed", "evidence": {"cases": [c["id"] for c in cases]}, "certification": "certified", "paper_case": None}, ns)
        return EXIT_OK
    if not cases:
        sys.stderr.write("qgkit: warning: empty corpus, nothing to check\n")
    report = summarize(run_corpus(cases, ns.jobs), ns.timings)
    emit(report, ns)
    for cid in report["evidence"]["failed"]:
        sys.stderr.write(f"qgkit: corpus mismatch in case {cid}\n")
    return EXIT_OK if report["verdict"] == "pass" else EXIT_MISMATCH


def write_corpus(path, cases: list[dict] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cases if cases is not None else BUILTIN, fh, indent=2, sort_keys=True)
        fh.write("\n")


__all__ = ["BUILTIN", "CaseResult", "load_corpus", "main_corpus", "run_case", "run_corpus", "summarize", "write_corpus"]
