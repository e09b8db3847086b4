"""Ring presentation files.

A file is a list of ``key: value`` lines; ``#`` starts a comment::

    field: 101
    vars: x, y, z
    relations: x^2, y^2 + x*z, z^2
    sequence s: x, y, z

``field`` is a prime or ``QQ`` (default 101).  ``relations`` may be given
more than once; the lists are concatenated.  Homogeneous presentations go
to the graded engine, or to the artinian engine when the quotient is
finite-dimensional.  Inhomogeneous presentations are accepted only when
they define a finite local algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .artin import FiniteLocalAlgebra, from_presentation
from .graded import GradedQuotientRing, InhomogeneousError, NotArtinianError
from .linalg import QQ, PrimeField
from .poly import ParseError, Polynomial, PolynomialRing, split_top_level


class RingFileError(ValueError):
    """A malformed presentation, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class RingPresentation:
    field: object
    variables: list[str]
    relations: list[Polynomial]
    sequences: dict[str, list[str]] = field(default_factory=dict)
    poly_ring: PolynomialRing | None = None

    def build(self, engine: str | None = None):
        """Route to an engine; ``engine`` forces "graded" or "artinian"."""
        P = self.poly_ring
        homog = all(r.is_homogeneous() for r in self.relations)
        if engine == "graded" or (engine is None and homog):
            R = GradedQuotientRing(P, self.relations)
            if engine is None and R.is_artinian():
                return from_presentation(P, self.relations)
            return R
        if engine not in (None, "artinian"):
            raise ValueError(f"unknown engine {engine!r}")
        try:
            return from_presentation(P, self.relations)
        except NotArtinianError as exc:
            kind = "homogeneous" if homog else "inhomogeneous"
            raise NotArtinianError(f"{kind} presentation rejected: {exc}") from exc

    def to_text(self) -> str:
        lines = [f"field: {_field_name(self.field)}", f"vars: {', '.join(self.variables)}"]
        if self.relations:
            lines.append("relations: " + ", ".join(str(r) for r in self.relations))
        for name, seq in self.sequences.items():
            lines.append(f"sequence {name}: {', '.join(seq)}")
        return "\n".join(lines) + "\n"


def _field_name(F) -> str:
    return "QQ" if F is QQ else str(F.p)


def _parse_field(text: str, line: int):
    t = text.strip()
    if t.upper() in ("QQ", "Q", "0"):
        return QQ
    try:
        return PrimeField(int(t))
    except ValueError as exc:
        raise RingFileError(f"bad field {t!r}: {exc}", line, 1) from None


def parse_ring_text(text: str) -> RingPresentation:
    F = None
    variables: list[str] | None = None
    rel_src: list[tuple[str, int, int]] = []  # (text, line, column)
    seqs: dict[str, tuple[list[str], int]] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ":" not in body:
            raise RingFileError("expected 'key: value'", ln, len(body) - len(body.lstrip()) + 1)
        key, val = body.split(":", 1)
        vcol = len(key) + 2
        k = key.strip().lower()
        if k == "field":
            F = _parse_field(val, ln)
        elif k in ("vars", "variables"):
            variables = [v.strip() for v in val.split(",") if v.strip()]
        elif k in ("relations", "relation"):
            pos = 0
            for part in split_top_level(val):
                start = val.index(part, pos) if part else pos
                pos = start + len(part)
                if part.strip():
                    lead = len(part) - len(part.lstrip())
                    rel_src.append((part.strip(), ln, vcol + start + lead))
        elif k.startswith("sequence"):
            name = k[len("sequence") :].strip() or "default"
            seqs[name] = ([s.strip() for s in split_top_level(val) if s.strip()], ln)
        else:
            raise RingFileError(f"unknown key {key.strip()!r}", ln, len(key) - len(key.lstrip()) + 1)
    if variables is None:
        raise RingFileError("missing 'vars' line", max(1, len(text.splitlines())))
    try:
        P = PolynomialRing(variables, F or PrimeField(101))
    except ValueError as exc:
        raise RingFileError(str(exc), 1) from None
    rels = []
    for src, ln, col in rel_src:
        try:
            rels.append(P.parse(src))
        except ParseError as exc:
            raise RingFileError(exc.message, ln, col + exc.column - 1) from None
    for name, (seq, ln) in seqs.items():
        for s in seq:
            try:
                P.parse(s)
            except ParseError as exc:
                raise RingFileError(f"sequence {name}: {exc.message}", ln, exc.column) from None
    return RingPresentation(P.field, variables, rels, {n: s for n, (s, _) in seqs.items()}, P)


def parse_ring_file(path) -> RingPresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_ring_text(fh.read())


def ring_from_text(text: str, engine: str | None = None):
    return parse_ring_text(text).build(engine)


def describe_ring(ring) -> dict:
    """Summary used by ``define``."""
    if isinstance(ring, FiniteLocalAlgebra):
        return {
            "engine": "artinian",
            "dim": ring.dim,
            "basis": list(ring.labels),
            "socle_dim": ring.socle.dim,
            "embedding_dim": ring.embedding_dimension(),
            "loewy_length": ring.loewy_length(),
        }
    R: GradedQuotientRing = ring
    return {
        "engine": "graded",
        "ring": repr(R),
        "krull_dim": R.krull_dim,
        "hilbert_prefix": R.hilbert_prefix(6),
        "groebner_basis": [str(g) for g in R.ideal.generators],
    }


__all__ = [
    "InhomogeneousError",
    "NotArtinianError",
    "RingFileError",
    "RingPresentation",
    "describe_ring",
    "parse_ring_file",
    "parse_ring_text",
    "ring_from_text",
]
