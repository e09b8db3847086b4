"""Graded quotient rings k[x]/I (I homogeneous) and their finitely presented modules.

Modules are subquotients ``(<U> + <W> + I F) / (<W> + I F)`` of a graded free
module ``F = R^rank`` whose basis vector ``e_c`` sits in degree ``shifts[c]``.
Everything is decided with Gröbner bases over the ambient polynomial ring.
"""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .groebner import (
    GroebnerBasis,
    ModuleGB,
    Vec,
    buchberger,
    monomial_krull_dim,
    reduce_entries,
    standard_monomials_of_degree,
    syzygies,
    vec_add,
    vec_degree,
    vec_from_polys,
    vec_is_homogeneous,
    vec_mul_poly,
    vec_to_polys,
)
from .poly import Polynomial, PolynomialRing


class NotArtinianError(ValueError):
    """The quotient has an infinite staircase."""


class InhomogeneousError(ValueError):
    """The graded engine was handed inhomogeneous data."""


class GradedQuotientRing:
    """R = k[x_1..x_n] / I for a homogeneous ideal I generated in positive degree."""

    engine = "graded"

    def __init__(self, ring: PolynomialRing, relations: Sequence[Polynomial] = ()):
        rels = [r for r in relations if not r.is_zero()]
        for r in rels:
            if not r.is_homogeneous():
                raise InhomogeneousError(f"relation {r} is not homogeneous")
            if r.degree() <= 0:
                raise InhomogeneousError(f"relation {r} is a unit")
        self.poly_ring = ring
        self.field = ring.field
        self.relations = rels
        self.ideal = buchberger(rels, ring)

    def __repr__(self) -> str:
        rels = ", ".join(str(g) for g in self.ideal.generators)
        return f"{self.poly_ring}/({rels})" if rels else repr(self.poly_ring)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedQuotientRing) and self.ideal == other.ideal

    def __hash__(self):
        return hash(self.ideal)

    @property
    def variables(self):
        return self.poly_ring.variables

    @property
    def nvars(self) -> int:
        return self.poly_ring.nvars

    # element protocol shared with FiniteLocalAlgebra ------------------------
    def element(self, f) -> Polynomial:
        if isinstance(f, str):
            f = self.poly_ring.parse(f)
        return self.ideal.normal_form(f)

    def zero_elt(self) -> Polynomial:
        return self.poly_ring.zero()

    def one_elt(self) -> Polynomial:
        return self.poly_ring.one()

    def add(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return a + b

    def neg(self, a: Polynomial) -> Polynomial:
        return -a

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return self.ideal.normal_form(a * b)

    def scal(self, c, a: Polynomial) -> Polynomial:
        return a * c

    def is_zero(self, a: Polynomial) -> bool:
        return self.ideal.normal_form(a).is_zero()

    def equal(self, a, b) -> bool:
        return self.is_zero(a - b)

    def in_maximal_ideal(self, a: Polynomial) -> bool:
        return self.element(a).constant_term() == 0

    def is_unit(self, a: Polynomial) -> bool:
        return not self.in_maximal_ideal(a)

    def elt_str(self, a: Polynomial) -> str:
        return str(self.element(a))

    # ideals ---------------------------------------------------------------
    def ideal_of(self, gens: Sequence[Polynomial]) -> GroebnerBasis:
        """Gröbner basis of I + (gens) in the ambient ring."""
        return buchberger(list(self.ideal.generators) + [g for g in gens if not g.is_zero()], self.poly_ring)

    def quotient(self, gens: Sequence[Polynomial]) -> "GradedQuotientRing":
        return GradedQuotientRing(self.poly_ring, list(self.ideal.generators) + [self.element(g) for g in gens])

    def ideals_equal(self, a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
        return self.ideal_of(a) == self.ideal_of(b)

    def colon(self, f: Polynomial) -> GroebnerBasis:
        """(I : f), an ideal of the ambient ring containing I."""
        from .groebner import colon

        return colon(self.ideal, f)

    def annihilator(self, f: Polynomial) -> list[Polynomial]:
        """Minimal generators of ann_R(f), as normal forms."""
        col = self.colon(self.element(f))
        return minimal_ideal_generators(self, col.generators)

    def annihilator_of_ideal(self, gens: Sequence[Polynomial]) -> list[Polynomial]:
        """ann_R((gens)) = intersection of the elementwise annihilators."""
        cols = [vec_from_polys([self.element(g)], offset=i) for i, g in enumerate(gens)]
        column = {}
        for c in cols:
            column.update(c)
        syz = syzygies([column], len(gens), self.poly_ring, self.ideal)
        firsts = [Polynomial(self.poly_ring, {e: a for (c, e), a in v.items() if c == 0}) for v in syz]
        return minimal_ideal_generators(self, [p for p in firsts if not p.is_zero()])

    # Hilbert function -----------------------------------------------------------
    @property
    def leading_exps(self):
        return self.ideal.leading_exps

    def hilbert_function(self, d: int) -> int:
        return len(standard_monomials_of_degree(self.poly_ring, self.leading_exps, d))

    def hilbert_prefix(self, n: int) -> list[int]:
        return [self.hilbert_function(d) for d in range(n + 1)]

    @cached_property
    def krull_dim(self) -> int:
        return monomial_krull_dim(self.nvars, self.leading_exps)

    def is_artinian(self) -> bool:
        return self.krull_dim == 0

    def quotient_basis(self) -> list[tuple[int, ...]]:
        if not self.is_artinian():
            raise NotArtinianError(f"{self} is not artinian (Krull dimension {self.krull_dim})")
        out = []
        d = 0
        while True:
            block = standard_monomials_of_degree(self.poly_ring, self.leading_exps, d)
            if not block:
                return out
            out.extend(block)
            d += 1


def hilbert_series_and_dim(R: GradedQuotientRing, n: int = 10) -> tuple[list[int], int]:
    return R.hilbert_prefix(n), R.krull_dim


def quotient_basis(R: GradedQuotientRing) -> list[tuple[int, ...]]:
    return R.quotient_basis()


def minimal_ideal_generators(R: GradedQuotientRing, gens: Sequence[Polynomial]) -> list[Polynomial]:
    """Graded-Nakayama minimal generators of an ideal of R (normal forms)."""
    vecs = [vec_from_polys([R.element(g)]) for g in gens]
    M = GradedModule(R, 1, [0], [v for v in vecs if v], [])
    return [vec_to_polys(v, 1, R.poly_ring)[0] for v in M.minimal_generators()]


def apply_matrix(columns: Sequence[Vec], v: Vec, R: GradedQuotientRing) -> Vec:
    """Image of v under the map sending e_c to columns[c]."""
    out: Vec = {}
    F = R.field
    comps: dict[int, dict] = {}
    for (c, e), a in v.items():
        comps.setdefault(c, {})[e] = a
    for c, terms in comps.items():
        out = vec_add(out, vec_mul_poly(columns[c], Polynomial(R.poly_ring, terms)), F)
    return reduce_entries(out, R.ideal, R.poly_ring)


class GradedModule:
    """Subquotient (<gens> + <rels>) / <rels> of R^rank over R = k[x]/I."""

    def __init__(
        self,
        ring: GradedQuotientRing,
        rank: int,
        shifts: Sequence[int],
        gens: Sequence[Vec],
        rels: Sequence[Vec] = (),
    ):
        self.ring = ring
        self.rank = rank
        self.shifts = list(shifts)
        if len(self.shifts) != rank:
            raise ValueError("one shift per free generator")
        P = ring.poly_ring
        self.gens = [g for g in (reduce_entries(dict(v), ring.ideal, P) for v in gens) if g]
        self.rels = [r for r in (reduce_entries(dict(v), ring.ideal, P) for v in rels) if r]
        for v in self.gens + self.rels:
            if not vec_is_homogeneous(v, self.shifts):
                raise InhomogeneousError("module data must be homogeneous")

    @classmethod
    def free(cls, ring: GradedQuotientRing, rank: int, shifts: Sequence[int] | None = None) -> "GradedModule":
        shifts = list(shifts) if shifts is not None else [0] * rank
        one = (0,) * ring.nvars
        return cls(ring, rank, shifts, [{(c, one): 1} for c in range(rank)], [])

    @classmethod
    def cokernel(cls, ring, rank: int, shifts, relations: Sequence[Vec]) -> "GradedModule":
        one = (0,) * ring.nvars
        return cls(ring, rank, shifts, [{(c, one): 1} for c in range(rank)], relations)

    @classmethod
    def cyclic(cls, ring: GradedQuotientRing, ideal_gens: Sequence[Polynomial]) -> "GradedModule":
        """R / (ideal_gens)."""
        return cls.cokernel(ring, 1, [0], [vec_from_polys([ring.element(g)]) for g in ideal_gens])

    def __repr__(self) -> str:
        return f"GradedModule(rank={self.rank}, gens={len(self.gens)}, rels={len(self.rels)})"

    @property
    def is_cokernel(self) -> bool:
        one = (0,) * self.ring.nvars
        return len(self.gens) == self.rank and all(g == {(c, one): g.get((c, one))} and g[(c, one)] == 1 for c, g in enumerate(self.gens))

    @cached_property
    def relation_gb(self) -> ModuleGB:
        gb = self.ring.ideal.module_gb(self.rank)
        gb.add_all(self.rels)
        return gb

    def reduce(self, v: Vec) -> Vec:
        return self.relation_gb.reduce(v)

    def is_zero(self) -> bool:
        return all(not self.reduce(g) for g in self.gens)

    def degree(self, v: Vec) -> int:
        return vec_degree(v, self.shifts)

    def minimal_generators(self) -> list[Vec]:
        """A minimal homogeneous generating set, lowest degree first.

        A candidate is kept when it is not in <rels> + m<gens> + <kept>.
        """
        cands = [g for g in self.gens if self.reduce(g)]
        order = sorted(range(len(cands)), key=lambda i: (self.degree(cands[i]), i))
        gb = self.relation_gb.copy()
        P = self.ring.poly_ring
        mgens = []
        for g in cands:
            for x in P.gens():
                w = reduce_entries(vec_mul_poly(g, x), self.ring.ideal, P)
                if w:
                    mgens.append(w)
        gb.add_all(mgens)
        kept = []
        for i in order:
            g = cands[i]
            if gb.reduce(g):
                kept.append(g)
                gb.add(g)
        return kept

    @cached_property
    def num_generators(self) -> int:
        return len(self.minimal_generators())

    def is_cyclic(self) -> bool:
        return self.num_generators == 1

    def annihilator(self) -> GroebnerBasis:
        """ann_R(M) as an ideal of the ambient ring containing I."""
        gens = self.minimal_generators()
        P = self.ring.poly_ring
        if not gens:
            return buchberger([P.one()], P)
        mu = len(gens)
        column: Vec = {}
        for k, g in enumerate(gens):
            for (c, e), a in g.items():
                column[(k * self.rank + c, e)] = a
        rels = []
        for k in range(mu):
            for r in self.rels:
                rels.append({(k * self.rank + c, e): a for (c, e), a in r.items()})
        syz = syzygies([column] + rels, mu * self.rank, P, self.ring.ideal)
        firsts = [Polynomial(P, {e: a for (c, e), a in v.items() if c == 0}) for v in syz]
        return self.ring.ideal_of([p for p in firsts if not p.is_zero()])

    def annihilates(self, ideal: Sequence[Polynomial]) -> bool:
        P = self.ring.poly_ring
        for f in ideal:
            for g in self.gens:
                if self.reduce(reduce_entries(vec_mul_poly(g, f), self.ring.ideal, P)):
                    return False
        return True


def kernel_of_map(
    ring: GradedQuotientRing,
    source: GradedModule,
    columns: Sequence[Vec],
    target: GradedModule,
) -> list[Vec]:
    """Generators of {u in <source.gens>: map(u) in target relations}.

    ``columns`` give the map on the free module of ``source``; the result
    is a list of vectors in that free module (the kernel, without adding
    ``source.rels``).
    """
    images = [apply_matrix(columns, g, ring) for g in source.gens]
    extra = list(target.rels)
    syz = syzygies(images + extra, target.rank, ring.poly_ring, ring.ideal)
    ngen = len(source.gens)
    out = []
    F = ring.field
    for s in syz:
        z: Vec = {}
        for j in range(ngen):
            coeff = {e: a for (c, e), a in s.items() if c == j}
            if coeff:
                z = vec_add(z, vec_mul_poly(source.gens[j], Polynomial(ring.poly_ring, coeff)), F)
        z = reduce_entries(z, ring.ideal, ring.poly_ring)
        if z:
            out.append(z)
    return out


class GradedComplex:
    """A bounded chain complex of :class:`GradedModule` s.

    ``diffs[i]`` is the list of columns of d_i : F_i -> F_{i-1} on the
    ambient free modules; it must carry gens into gens + rels and rels into
    rels.
    """

    def __init__(self, ring: GradedQuotientRing, modules: dict, diffs: dict):
        self.ring = ring
        self.modules = dict(modules)
        self.diffs = dict(diffs)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.modules)

    def d(self, i: int):
        return self.diffs.get(i)

    def check_d_squared(self) -> bool:
        for i in self.degrees:
            if i in self.diffs and (i - 1) in self.diffs:
                for g in self.modules[i].gens:
                    w = apply_matrix(self.diffs[i - 1], apply_matrix(self.diffs[i], g, self.ring), self.ring)
                    if self.modules[i - 2].reduce(w):
                        return False
        return True

    def homology(self, i: int) -> GradedModule:
        if i not in self.modules:
            return GradedModule(self.ring, 0, [], [], [])
        M = self.modules[i]
        if i in self.diffs and (i - 1) in self.modules:
            Z = kernel_of_map(self.ring, M, self.diffs[i], self.modules[i - 1])
        else:
            Z = list(M.gens)
        B = list(M.rels)
        if (i + 1) in self.diffs and (i + 1) in self.modules:
            B += [apply_matrix(self.diffs[i + 1], g, self.ring) for g in self.modules[i + 1].gens]
        return GradedModule(self.ring, M.rank, M.shifts, Z, B)
