"""Buchberger's algorithm for ideals and for submodules of free modules.

Module elements ("vectors") are dicts ``{(component, exponent): coeff}``.
An ideal is the one-component case.  Submodule orders are
position-over-term with component 0 largest, which is what makes syzygy
extraction by elimination work.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .poly import Polynomial, PolynomialRing

Vec = dict


# vector helpers -------------------------------------------------------------

def vec_from_polys(polys: Sequence[Polynomial], offset: int = 0) -> Vec:
    out = {}
    for c, p in enumerate(polys):
        for e, a in p.terms.items():
            out[(c + offset, e)] = a
    return out


def vec_to_polys(v: Vec, ncomp: int, ring: PolynomialRing) -> list[Polynomial]:
    buckets: list[dict] = [{} for _ in range(ncomp)]
    for (c, e), a in v.items():
        buckets[c][e] = a
    return [Polynomial(ring, b) for b in buckets]


def vec_add(a: Vec, b: Vec, F, scale=1) -> Vec:
    out = dict(a)
    for t, c in b.items():
        s = F.elt(out.get(t, 0) + scale * c)
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def vec_mul_term(v: Vec, coeff, exp, F) -> Vec:
    return {
        (c, tuple(x + y for x, y in zip(e, exp))): F.elt(a * coeff)
        for (c, e), a in v.items()
        if F.elt(a * coeff)
    }


def vec_mul_poly(v: Vec, p: Polynomial) -> Vec:
    F = p.ring.field
    out: Vec = {}
    for e2, a2 in p.terms.items():
        for (c, e), a in v.items():
            t = (c, tuple(x + y for x, y in zip(e, e2)))
            s = F.elt(out.get(t, 0) + a * a2)
            if s:
                out[t] = s
            else:
                out.pop(t, None)
    return out


def vec_shift_components(v: Vec, delta: int) -> Vec:
    return {(c + delta, e): a for (c, e), a in v.items()}


def vec_degree(v: Vec, shifts: Sequence[int] | None = None) -> int:
    """Degree of a homogeneous vector (exponent degree plus component shift)."""
    if not v:
        return -(10**9)
    (c, e) = next(iter(v))
    return sum(e) + (shifts[c] if shifts else 0)


def vec_is_homogeneous(v: Vec, shifts: Sequence[int] | None = None) -> bool:
    return len({sum(e) + (shifts[c] if shifts else 0) for (c, e) in v}) <= 1


def term_key(ring: PolynomialRing):
    mk = ring.key

    def key(t):
        return (-t[0], mk(t[1]))

    return key


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


class ModuleGB:
    """An incrementally grown Gröbner basis of a submodule of R^ncomp.

    The basis is not interreduced; :meth:`reduced` produces the canonical
    reduced, monic basis.  Membership tests only need the unreduced one.
    """

    def __init__(self, ring: PolynomialRing, ncomp: int = 1, vectors: Iterable[Vec] = ()):
        self.ring = ring
        self.F = ring.field
        self.ncomp = ncomp
        self.key = term_key(ring)
        self.gens: list[Vec] = []
        self.leads: list[tuple] = []
        self.add_all(vectors)

    def copy(self) -> "ModuleGB":
        g = ModuleGB.__new__(ModuleGB)
        g.ring, g.F, g.ncomp, g.key = self.ring, self.F, self.ncomp, self.key
        g.gens, g.leads = list(self.gens), list(self.leads)
        return g

    def _lead(self, v: Vec):
        return max(v, key=self.key)

    def reduce(self, v: Vec) -> Vec:
        """Fully reduced remainder of v."""
        F = self.F
        v = dict(v)
        rem: Vec = {}
        key = self.key
        while v:
            t = max(v, key=key)
            c = v[t]
            hit = None
            for g, (gc, ge) in zip(self.gens, self.leads):
                if gc == t[0] and _divides(ge, t[1]):
                    hit = (g, ge)
                    break
            if hit is None:
                rem[t] = c
                del v[t]
                continue
            g, ge = hit
            q = tuple(x - y for x, y in zip(t[1], ge))
            lc = g[(t[0], ge)]
            f = F.elt(c * F.inv(lc))
            for (gc2, e2), a in g.items():
                tt = (gc2, tuple(x + y for x, y in zip(e2, q)))
                s = F.elt(v.get(tt, 0) - f * a)
                if s:
                    v[tt] = s
                else:
                    v.pop(tt, None)
        return rem

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def _monic(self, v: Vec) -> Vec:
        lc = v[self._lead(v)]
        inv = self.F.inv(lc)
        return {t: self.F.elt(a * inv) for t, a in v.items()}

    def _spoly(self, i: int, j: int) -> Vec:
        ci, ei = self.leads[i]
        cj, ej = self.leads[j]
        lcm = tuple(max(x, y) for x, y in zip(ei, ej))
        a = vec_mul_term(self.gens[i], self.F.inv(self.gens[i][(ci, ei)]), tuple(x - y for x, y in zip(lcm, ei)), self.F)
        b = vec_mul_term(self.gens[j], self.F.inv(self.gens[j][(cj, ej)]), tuple(x - y for x, y in zip(lcm, ej)), self.F)
        return vec_add(a, b, self.F, scale=-1)

    def _push(self, v: Vec, pairs: list):
        v = self._monic(v)
        lead = self._lead(v)
        n = len(self.gens)
        self.gens.append(v)
        self.leads.append(lead)
        for i in range(n):
            ci, ei = self.leads[i]
            if ci != lead[0]:
                continue
            lcm = tuple(max(x, y) for x, y in zip(ei, lead[1]))
            if self.ncomp == 1 and all(x == 0 or y == 0 for x, y in zip(ei, lead[1])):
                continue  # coprime leading monomials: S-polynomial reduces to 0
            pairs.append((sum(lcm), self.key((ci, lcm)), i, n))

    def add_all(self, vectors: Iterable[Vec]):
        pairs: list = []
        for v in vectors:
            r = self.reduce(v)
            if r:
                self._push(r, pairs)
        self._complete(pairs)

    def add(self, v: Vec):
        self.add_all([v])

    def _complete(self, pairs: list):
        while pairs:
            # normal strategy: smallest lcm degree first, ties by order
            best = min(range(len(pairs)), key=lambda k: (pairs[k][0], pairs[k][1], pairs[k][2], pairs[k][3]))
            _, _, i, j = pairs.pop(best)
            s = self._spoly(i, j)
            r = self.reduce(s)
            if r:
                self._push(r, pairs)

    def reduced(self) -> list[Vec]:
        """The reduced, monic Gröbner basis, sorted by decreasing leading term."""
        idx = list(range(len(self.gens)))
        minimal = []
        for i in idx:
            ci, ei = self.leads[i]
            dominated = False
            for j in idx:
                if j == i:
                    continue
                cj, ej = self.leads[j]
                if cj == ci and _divides(ej, ei) and (ej != ei or j < i):
                    dominated = True
                    break
            if not dominated:
                minimal.append(i)
        base = [self.gens[i] for i in minimal]
        out = []
        for k, v in enumerate(base):
            others = ModuleGB.__new__(ModuleGB)
            others.ring, others.F, others.ncomp, others.key = self.ring, self.F, self.ncomp, self.key
            others.gens = [w for m, w in enumerate(base) if m != k]
            others.leads = [self._lead(w) for w in others.gens]
            lead = self._lead(v)
            tail = {t: a for t, a in v.items() if t != lead}
            out.append(self._monic({lead: v[lead], **others.reduce(tail)}))
        out.sort(key=lambda v: self.key(self._lead(v)), reverse=True)
        return out


# ideals ----------------------------------------------------------------------

class GroebnerBasis:
    """Reduced Gröbner basis of an ideal of a polynomial ring."""

    def __init__(self, ring: PolynomialRing, generators: Sequence[Polynomial]):
        self.ring = ring
        self.order = ring.order
        self._gb = ModuleGB(ring, 1, [vec_from_polys([g]) for g in generators if not g.is_zero()])
        self.generators = [vec_to_polys(v, 1, ring)[0] for v in self._gb.reduced()]
        # rebuild the engine on the reduced basis so reductions are canonical
        self._gb = ModuleGB.__new__(ModuleGB)
        self._gb.ring, self._gb.F, self._gb.ncomp, self._gb.key = ring, ring.field, 1, term_key(ring)
        self._gb.gens = [vec_from_polys([g]) for g in self.generators]
        self._gb.leads = [(0, g.leading_exp()) for g in self.generators]

    def __repr__(self) -> str:
        return f"GroebnerBasis({[str(g) for g in self.generators]})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GroebnerBasis) and self.ring == other.ring and self.generators == other.generators

    def __hash__(self):
        return hash(tuple(self.generators))

    @property
    def leading_exps(self) -> list[tuple[int, ...]]:
        return [g.leading_exp() for g in self.generators]

    def is_unit_ideal(self) -> bool:
        return any(sum(e) == 0 for e in self.leading_exps)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.is_zero():
            return f
        return vec_to_polys(self._gb.reduce(vec_from_polys([f])), 1, self.ring)[0]

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "GroebnerBasis") -> bool:
        return all(self.contains(g) for g in other.generators)

    def module_gb(self, ncomp: int) -> ModuleGB:
        """Gröbner basis of I * R^ncomp."""
        g = ModuleGB.__new__(ModuleGB)
        g.ring, g.F, g.ncomp, g.key = self.ring, self.ring.field, ncomp, term_key(self.ring)
        g.gens = [vec_from_polys([p], offset=c) for c in range(ncomp) for p in self.generators]
        g.leads = [(c, p.leading_exp()) for c in range(ncomp) for p in self.generators]
        return g


def buchberger(gens: Sequence[Polynomial], ring: PolynomialRing | None = None) -> GroebnerBasis:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need at least one generator or an explicit ring")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different rings")
    return GroebnerBasis(ring, gens)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


def reduce_entries(v: Vec, ideal: GroebnerBasis | None, ring: PolynomialRing) -> Vec:
    """Componentwise normal form modulo the ideal."""
    if ideal is None or not ideal.generators or not v:
        return v
    comps = sorted({c for c, _ in v})
    out: Vec = {}
    for c in comps:
        p = Polynomial(ring, {e: a for (cc, e), a in v.items() if cc == c})
        for e, a in ideal.normal_form(p).terms.items():
            out[(c, e)] = a
    return out


# syzygies ---------------------------------------------------------------------

def syzygies(
    columns: Sequence[Vec],
    ncomp: int,
    ring: PolynomialRing,
    ideal: GroebnerBasis | None = None,
) -> list[Vec]:
    """Generators of the kernel of (R/I)^m -> (R/I)^ncomp, e_j -> columns[j].

    Computed by elimination: a position-over-term basis of the module
    generated by (columns[j], e_j) and I * R^ncomp.  Returned vectors live
    in components 0..m-1 and are reduced modulo I; zero ones are dropped.
    """
    m = len(columns)
    if m == 0:
        return []
    work = ModuleGB(ring, ncomp + m)
    if ideal is not None and ideal.generators:
        work.gens = list(ideal.module_gb(ncomp).gens)
        work.leads = [work._lead(g) for g in work.gens]
        # pairs among the ideal blocks reduce to zero already
    tagged = []
    for j, col in enumerate(columns):
        v = dict(col)
        v[(ncomp + j, (0,) * ring.nvars)] = ring.field.elt(1)
        tagged.append(v)
    work.add_all(tagged)
    out = []
    seen = set()
    for g in work.reduced():
        lead = work._lead(g)
        if lead[0] < ncomp:
            continue
        v = reduce_entries(vec_shift_components(g, -ncomp), ideal, ring)
        if v:
            k = frozenset(v.items())
            if k not in seen:
                seen.add(k)
                out.append(v)
    return out


def colon(ideal: GroebnerBasis, f: Polynomial) -> GroebnerBasis:
    """(I : f) in the polynomial ring."""
    ring = ideal.ring
    if f.is_zero():
        return buchberger([ring.one()], ring)
    cols = [vec_from_polys([f])] + [vec_from_polys([g]) for g in ideal.generators]
    syz = syzygies(cols, 1, ring)
    firsts = [Polynomial(ring, {e: a for (c, e), a in v.items() if c == 0}) for v in syz]
    return buchberger([p for p in firsts if not p.is_zero()] + list(ideal.generators), ring)


def ideal_sum(a: GroebnerBasis, gens: Sequence[Polynomial]) -> GroebnerBasis:
    return buchberger(list(a.generators) + list(gens), a.ring)


# staircases --------------------------------------------------------------------

def standard_monomials_of_degree(ring: PolynomialRing, leads: Sequence[tuple], d: int) -> list[tuple]:
    return [e for e in ring.monomials_of_degree(d) if not any(_divides(l, e) for l in leads)]


def monomial_krull_dim(nvars: int, leads: Sequence[tuple]) -> int:
    """Krull dimension of k[x]/(monomials): the largest variable set avoiding every generator."""
    if any(sum(l) == 0 for l in leads):
        return -1
    supports = [frozenset(i for i, x in enumerate(l) if x) for l in leads]
    best = 0
    from itertools import combinations

    for size in range(nvars, 0, -1):
        for S in combinations(range(nvars), size):
            Sset = set(S)
            if not any(sup <= Sset for sup in supports):
                return size
    return best


# determinants and pfaffians -------------------------------------------------------

def determinant(m: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Laplace expansion along the first row (small matrices only)."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    ring = m[0][0].ring
    memo: dict = {}

    def det(rows: tuple, cols: tuple) -> Polynomial:
        if not rows:
            return ring.one()
        k = (rows, cols)
        if k in memo:
            return memo[k]
        r0 = rows[0]
        total = ring.zero()
        for idx, c in enumerate(cols):
            a = m[r0][c]
            if a.is_zero():
                continue
            sub = det(rows[1:], cols[:idx] + cols[idx + 1 :])
            total = total + a * sub if idx % 2 == 0 else total - a * sub
        memo[k] = total
        return total

    return det(tuple(range(n)), tuple(range(n)))


def is_alternating(m: Sequence[Sequence[Polynomial]]) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][i].is_zero() and all((m[i][j] + m[j][i]).is_zero() for j in range(n)) for i in range(n)
    )


def pfaffian(m: Sequence[Sequence[Polynomial]], indices: Sequence[int] | None = None) -> Polynomial:
    """Pfaffian of the principal submatrix on ``indices``.

    Expansion along the first index: Pf = sum_j (-1)^(j+1) a_{0 j} Pf(minor),
    with j counted from 0 in the index list.
    """
    if indices is None:
        indices = tuple(range(len(m)))
    ring = m[0][0].ring if m else None
    memo: dict = {}

    def pf(idx: tuple) -> Polynomial:
        if not idx:
            return ring.one()
        if len(idx) % 2:
            return ring.zero()
        if idx in memo:
            return memo[idx]
        i0 = idx[0]
        total = ring.zero()
        for j in range(1, len(idx)):
            a = m[i0][idx[j]]
            if a.is_zero():
                continue
            rest = idx[1:j] + idx[j + 1 :]
            term = a * pf(rest)
            total = total + term if j % 2 == 1 else total - term
        memo[idx] = total
        return total

    return pf(tuple(indices))


def pfaffian_ideal(m: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    """The n sub-maximal pfaffians of an odd alternating matrix.

    Generator i is (-1)^i times the pfaffian with row and column i deleted.
    """
    n = len(m)
    if n % 2 == 0:
        raise ValueError("pfaffian_ideal needs an odd-size matrix")
    if not is_alternating(m):
        raise ValueError("matrix is not alternating")
    out = []
    for i in range(n):
        p = pfaffian(m, tuple(k for k in range(n) if k != i))
        out.append(p if i % 2 == 0 else -p)
    return out
