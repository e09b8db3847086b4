"""Bounded chain complexes over both engines, Koszul complexes, cones, tensor and Hom.

Grading is homological.  Sign conventions, used everywhere:

* shift: (ΣC)_i = C_{i-1} with d_ΣC = -d_C (generally (-1)^n for Σ^n);
* cone of f: C -> D: Cone_i = D_i ⊕ C_{i-1}, d(y, c) = (d y + f c, -d c);
* tensor: d(a ⊗ b) = d a ⊗ b + (-1)^|a| a ⊗ d b;
* Hom: (d f) = d ∘ f - (-1)^|f| f ∘ d.

Koszul basis vectors are the sorted index subsets S, with
d(e_S) = sum_k (-1)^k x_{s_k} e_{S - s_k}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from .artin import FGModule, FiniteLocalAlgebra, HomSpace, hom_matrix
from .graded import GradedComplex, GradedModule, GradedQuotientRing, InhomogeneousError
from .groebner import Vec, syzygies, vec_add, vec_from_polys, vec_mul_poly
from .linalg import Subspace, image, kernel
from .poly import Polynomial


class ComplexError(ValueError):
    pass


class ChainComplex:
    """A bounded complex of :class:`FGModule` s over a finite local algebra.

    ``diffs[i]`` is the k-matrix of d_i : C_i -> C_{i-1}.
    """

    def __init__(self, algebra: FiniteLocalAlgebra, modules: dict, diffs: dict | None = None, check: bool = True):
        self.ring = algebra
        self.modules = {i: M for i, M in modules.items()}
        self.diffs = {}
        F = algebra.field
        for i, m in (diffs or {}).items():
            if i in self.modules and (i - 1) in self.modules:
                m = np.array(m, dtype=F.dtype).reshape(self.modules[i - 1].dim, self.modules[i].dim)
                self.diffs[i] = F.reduce(m)
        if check:
            self.verify()

    def __repr__(self) -> str:
        dims = {i: M.dim for i, M in sorted(self.modules.items())}
        return f"ChainComplex({dims})"

    @property
    def degrees(self) -> list[int]:
        return sorted(self.modules)

    def module(self, i: int) -> FGModule:
        return self.modules.get(i) or FGModule.zero(self.ring)

    def d(self, i: int) -> np.ndarray:
        if i in self.diffs:
            return self.diffs[i]
        return self.ring.field.zeros((self.module(i - 1).dim, self.module(i).dim))

    def verify(self):
        F = self.ring.field
        for i, m in self.diffs.items():
            if not self.modules[i].is_equivariant(m, self.modules[i - 1]):
                raise ComplexError(f"d_{i} is not A-linear")
            if (i - 1) in self.diffs:
                if np.any(F.matmul(self.diffs[i - 1], m) != 0):
                    raise ComplexError(f"d_{i - 1} d_{i} != 0")

    def check_d_squared(self) -> bool:
        F = self.ring.field
        return all(not np.any(F.matmul(self.diffs[i - 1], m) != 0) for i, m in self.diffs.items() if (i - 1) in self.diffs)

    def cycles(self, i: int) -> Subspace:
        return kernel(self.d(i), self.ring.field) if self.module(i).dim else Subspace.zero(0, self.ring.field)

    def boundaries(self, i: int) -> Subspace:
        return image(self.d(i + 1), self.ring.field)

    def homology(self, i: int) -> FGModule:
        M = self.module(i)
        if M.dim == 0:
            return FGModule.zero(self.ring)
        return M.subquotient(self.cycles(i), self.boundaries(i))

    def homology_dims(self) -> dict[int, int]:
        return {i: self.homology(i).dim for i in self.degrees}

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * M.dim for i, M in self.modules.items())


def _is_graded(ring) -> bool:
    return isinstance(ring, GradedQuotientRing)


def homology(C, i: int):
    return C.homology(i)


@dataclass(frozen=True)
class Amplitude:
    sup: float
    inf: float
    amp: int | None

    @property
    def is_zero(self) -> bool:
        return self.amp is None


def sup_inf_amp(C) -> Amplitude:
    """sup, inf and amplitude read off the homology; the zero complex gives (-inf, inf, None)."""
    nz = [i for i in C.degrees if not C.homology(i).is_zero()]
    if not nz:
        return Amplitude(float("-inf"), float("inf"), None)
    return Amplitude(max(nz), min(nz), max(nz) - min(nz))


# --- Koszul complexes --------------------------------------------------------


def wedge(S: tuple, T: tuple):
    """e_S ∧ e_T = sign * e_U, or None when S and T overlap."""
    if set(S) & set(T):
        return None
    inversions = sum(1 for s in S for t in T if s > t)
    return (-1) ** inversions, tuple(sorted(S + T))


def _x_degree(x: Polynomial) -> int:
    if x.is_zero():
        return 1
    if not x.is_homogeneous():
        raise InhomogeneousError(f"{x} is not homogeneous")
    return x.degree()


def koszul_on_module(M, seq: Sequence, name_shifts: Sequence[int] | None = None):
    """The complex M ⊗ K(seq) for an FGModule or a GradedModule M."""
    n = len(seq)
    subsets = {i: list(itertools.combinations(range(n), i)) for i in range(n + 1)}
    index = {i: {S: a for a, S in enumerate(subsets[i])} for i in subsets}
    if isinstance(M, FGModule):
        A = M.algebra
        F = A.field
        xs = [A.element(x) for x in seq]
        acts = [M.act(x) for x in xs]
        d = M.dim
        if M.free_rank is not None:
            modules = {i: FGModule.free(A, M.free_rank * len(subsets[i])) for i in subsets}
        else:
            modules = {i: M.power(len(subsets[i])) if d else FGModule.zero(A) for i in subsets}
        diffs = {}
        for i in range(1, n + 1):
            mat = F.zeros((d * len(subsets[i - 1]), d * len(subsets[i])))
            for a, S in enumerate(subsets[i]):
                for k, s in enumerate(S):
                    b = index[i - 1][S[:k] + S[k + 1 :]]
                    blk = acts[s] if k % 2 == 0 else F.reduce(-acts[s])
                    mat[b * d : (b + 1) * d, a * d : (a + 1) * d] = F.reduce(mat[b * d : (b + 1) * d, a * d : (a + 1) * d] + blk)
            diffs[i] = mat
        return ChainComplex(A, modules, diffs, check=False)
    if isinstance(M, GradedModule):
        R = M.ring
        xs = [R.element(x) for x in seq]
        degs = [_x_degree(x) for x in xs]
        r = M.rank
        modules, diffs = {}, {}
        for i in subsets:
            shifts = [M.shifts[c] + sum(degs[s] for s in S) for S in subsets[i] for c in range(r)]
            gens = [{(a * r + c, e): v for (c, e), v in g.items()} for a in range(len(subsets[i])) for g in M.gens]
            rels = [{(a * r + c, e): v for (c, e), v in g.items()} for a in range(len(subsets[i])) for g in M.rels]
            modules[i] = GradedModule(R, r * len(subsets[i]), shifts, gens, rels)
        for i in range(1, n + 1):
            cols = []
            for S in subsets[i]:
                for c in range(r):
                    col: Vec = {}
                    for k, s in enumerate(S):
                        b = index[i - 1][S[:k] + S[k + 1 :]]
                        term = vec_from_polys([xs[s] if k % 2 == 0 else -xs[s]], offset=b * r + c)
                        col = vec_add(col, term, R.field)
                    cols.append(col)
            diffs[i] = cols
        return GradedComplex(R, modules, diffs)
    raise TypeError("expected an FGModule or a GradedModule")


def free_module(ring, rank: int = 1):
    if _is_graded(ring):
        return GradedModule.free(ring, rank)
    return FGModule.free(ring, rank)


class KoszulComplex:
    """K(x_1..x_n; ring) with its exterior multiplication.

    Elements of the dg-algebra are dicts {sorted subset: ring element}.
    """

    def __init__(self, ring, seq: Sequence):
        self.ring = ring
        self.seq = [ring.element(x) for x in seq]
        self.n = len(self.seq)
        self.subsets = {i: list(itertools.combinations(range(self.n), i)) for i in range(self.n + 1)}
        self.complex = koszul_on_module(free_module(ring, 1), self.seq)

    def __repr__(self) -> str:
        return f"KoszulComplex(n={self.n}, engine={self.ring.engine})"

    @property
    def degrees(self) -> list[int]:
        return list(range(self.n + 1))

    def rank(self, i: int) -> int:
        return comb(self.n, i) if 0 <= i <= self.n else 0

    def ranks(self) -> list[int]:
        return [self.rank(i) for i in self.degrees]

    def homology(self, i: int):
        return self.complex.homology(i)

    def sup_inf_amp(self) -> Amplitude:
        return sup_inf_amp(self.complex)

    def check_d_squared(self) -> bool:
        return self.complex.check_d_squared()

    # dg-algebra structure -----------------------------------------------
    def basis_element(self, S: tuple) -> dict:
        return {tuple(S): self.ring.one_elt()}

    def _clean(self, a: dict) -> dict:
        return {S: v for S, v in a.items() if not self.ring.is_zero(v)}

    def add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for S, v in b.items():
            out[S] = self.ring.add(out[S], v) if S in out else v
        return self._clean(out)

    def scale(self, c, a: dict) -> dict:
        return self._clean({S: self.ring.scal(c, v) for S, v in a.items()})

    def multiply(self, a: dict, b: dict) -> dict:
        R = self.ring
        out: dict = {}
        for S, u in a.items():
            for T, v in b.items():
                w = wedge(S, T)
                if w is None:
                    continue
                sign, U = w
                term = R.scal(sign, R.mul(u, v))
                out[U] = R.add(out[U], term) if U in out else term
        return self._clean(out)

    def differential(self, a: dict) -> dict:
        R = self.ring
        out: dict = {}
        for S, u in a.items():
            for k, s in enumerate(S):
                T = S[:k] + S[k + 1 :]
                term = R.scal((-1) ** k, R.mul(self.seq[s], u))
                out[T] = R.add(out[T], term) if T in out else term
        return self._clean(out)

    def check_leibniz(self) -> bool:
        """d(ab) = d(a) b + (-1)^|a| a d(b) on all pairs of basis wedges."""
        all_sets = [S for i in self.degrees for S in self.subsets[i]]
        for S in all_sets:
            for T in all_sets:
                a, b = self.basis_element(S), self.basis_element(T)
                lhs = self.differential(self.multiply(a, b))
                rhs = self.add(
                    self.multiply(self.differential(a), b),
                    self.scale((-1) ** len(S), self.multiply(a, self.differential(b))),
                )
                if not self._equal(lhs, rhs):
                    return False
        return True

    def check_graded_commutative(self) -> bool:
        all_sets = [S for i in self.degrees for S in self.subsets[i]]
        for S in all_sets:
            for T in all_sets:
                a, b = self.basis_element(S), self.basis_element(T)
                if not self._equal(self.multiply(a, b), self.scale((-1) ** (len(S) * len(T)), self.multiply(b, a))):
                    return False
                if len(S) % 2 == 1 and self.multiply(a, a):
                    return False
        return True

    def _equal(self, a: dict, b: dict) -> bool:
        return not self.add(a, self.scale(-1, b))


def koszul(ring, seq: Sequence) -> KoszulComplex:
    return KoszulComplex(ring, seq)


# --- shift, cone, tensor, Hom ------------------------------------------------


def shift(C, n: int = 1):
    """Σ^n C."""
    sign = -1 if n % 2 else 1
    if isinstance(C, ChainComplex):
        F = C.ring.field
        mods = {i + n: M for i, M in C.modules.items()}
        diffs = {i + n: F.reduce(sign * m) for i, m in C.diffs.items()}
        return ChainComplex(C.ring, mods, diffs, check=False)
    mods = {i + n: M for i, M in C.modules.items()}
    diffs = {i + n: [vec_mul_poly(col, C.ring.poly_ring.const(sign)) for col in cols] for i, cols in C.diffs.items()}
    return GradedComplex(C.ring, mods, diffs)


def _block_diag_modules(parts: list):
    out = parts[0]
    for p in parts[1:]:
        out = out.direct_sum(p)
    return out


def _graded_direct_sum(R, parts: list[GradedModule]) -> tuple[GradedModule, list[int]]:
    offsets, total, shifts, gens, rels = [], 0, [], [], []
    for P in parts:
        offsets.append(total)
        shifts += P.shifts
        gens += [{(c + total, e): v for (c, e), v in g.items()} for g in P.gens]
        rels += [{(c + total, e): v for (c, e), v in g.items()} for g in P.rels]
        total += P.rank
    return GradedModule(R, total, shifts, gens, rels), offsets


def _offset_vec(v: Vec, off: int) -> Vec:
    return {(c + off, e): a for (c, e), a in v.items()}


def cone(C, D, f: dict):
    """Cone of the chain map f: C -> D (f[i] : C_i -> D_i)."""
    if isinstance(C, ChainComplex):
        A = C.ring
        F = A.field
        degs = sorted(set(D.degrees) | {i + 1 for i in C.degrees})
        mods, diffs = {}, {}
        for i in degs:
            mods[i] = D.module(i).direct_sum(C.module(i - 1))
        for i in degs:
            if i - 1 not in mods:
                continue
            dD, dC = D.module(i).dim, C.module(i - 1).dim
            tD, tC = D.module(i - 1).dim, C.module(i - 2).dim
            m = F.zeros((tD + tC, dD + dC))
            m[:tD, :dD] = D.d(i)
            if dC and tD:
                fi = f.get(i - 1)
                if fi is not None:
                    m[:tD, dD:] = fi
            m[tD:, dD:] = F.reduce(-C.d(i - 1))
            diffs[i] = m
        return ChainComplex(A, mods, diffs)
    R = C.ring
    degs = sorted(set(D.degrees) | {i + 1 for i in C.degrees})
    empty = GradedModule(R, 0, [], [], [])
    mods, offs = {}, {}
    for i in degs:
        mods[i], o = _graded_direct_sum(R, [D.modules.get(i, empty), C.modules.get(i - 1, empty)])
        offs[i] = o[1]
    diffs = {}
    minus = R.poly_ring.const(-1)
    for i in degs:
        if i - 1 not in mods:
            continue
        cols = list(D.diffs.get(i, [{}] * D.modules.get(i, empty).rank))
        fcols = f.get(i - 1)
        Cmod = C.modules.get(i - 1, empty)
        dC = C.diffs.get(i - 1, [{}] * Cmod.rank)
        for c in range(Cmod.rank):
            col = fcols[c] if fcols is not None else {}
            col = vec_add(col, _offset_vec(vec_mul_poly(dC[c], minus), offs[i - 1]), R.field)
            cols.append(col)
        diffs[i] = cols
    return GradedComplex(R, mods, diffs)


def scalar_chain_map(C, x) -> dict:
    """Multiplication by a ring element as a chain map C -> C."""
    if isinstance(C, ChainComplex):
        x = C.ring.element(x)
        return {i: M.act(x) for i, M in C.modules.items()}
    x = C.ring.element(x)
    return {i: [vec_from_polys([x], offset=c) for c in range(M.rank)] for i, M in C.modules.items()}


def koszul_object(C, x):
    """C//x: the cone of multiplication by x on C (C a complex, a KoszulComplex or a ring)."""
    if isinstance(C, KoszulComplex):
        C = C.complex
    elif isinstance(C, (FiniteLocalAlgebra, GradedQuotientRing)):
        C = koszul_on_module(free_module(C, 1), [])
    if isinstance(C, GradedComplex):
        x = C.ring.element(x)
        dx = _x_degree(x)
        src = GradedComplex(
            C.ring,
            {i: GradedModule(C.ring, M.rank, [s + dx for s in M.shifts], M.gens, M.rels) for i, M in C.modules.items()},
            C.diffs,
        )
        return cone(src, C, scalar_chain_map(C, x))
    return cone(C, C, scalar_chain_map(C, x))


def _entry_elements(C: ChainComplex, i: int) -> list[list[np.ndarray]]:
    # entries c[b][a] in A of the free differential d_i : A^{r_i} -> A^{r_{i-1}}
    A = C.ring
    n = A.dim
    src, tgt = C.module(i), C.module(i - 1)
    m = C.d(i)
    return [[m[b * n : (b + 1) * n, a * n] for a in range(src.free_rank)] for b in range(tgt.free_rank)]


def _is_free_complex(C) -> bool:
    if isinstance(C, ChainComplex):
        return all(M.free_rank is not None for M in C.modules.values())
    return all(M.is_cokernel and not M.rels for M in C.modules.values())


def tensor(C, D):
    """C ⊗_A D; one of the factors must be a complex of free modules.

    When only D is free the result is built as D ⊗ C, which is isomorphic to
    C ⊗ D via a ⊗ b -> (-1)^{|a||b|} b ⊗ a.
    """
    if not _is_free_complex(C):
        if not _is_free_complex(D):
            raise ComplexError("tensor needs one factor to be a complex of free modules")
        C, D = D, C
    if isinstance(C, ChainComplex):
        return _tensor_artin(C, D)
    return _tensor_graded(C, D)


def _tensor_artin(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    A = C.ring
    F = A.field
    degs = sorted({i + j for i in C.degrees for j in D.degrees})
    layout: dict[int, list] = {}
    mods = {}
    for nn in degs:
        parts, off = [], 0
        for i in C.degrees:
            j = nn - i
            if j not in D.modules:
                continue
            blk = D.modules[j].power(C.modules[i].free_rank)
            parts.append((i, j, off, blk.dim))
            off += blk.dim
        layout[nn] = parts
        blocks = [D.modules[j].power(C.modules[i].free_rank) for (i, j, _, _) in parts]
        mods[nn] = _block_diag_modules(blocks) if blocks else FGModule.zero(A)
    diffs = {}
    for nn in degs:
        if nn - 1 not in mods:
            continue
        m = F.zeros((mods[nn - 1].dim, mods[nn].dim))
        where = {(i, j): (off, sz) for (i, j, off, sz) in layout[nn - 1]}
        for i, j, off, sz in layout[nn]:
            Dj = D.modules[j]
            dj = Dj.dim
            ri = C.modules[i].free_rank
            if (i - 1, j) in where and (i - 1) in C.modules:
                toff, _ = where[(i - 1, j)]
                ent = _entry_elements(C, i)
                for b, row in enumerate(ent):
                    for a, c in enumerate(row):
                        if np.any(c != 0):
                            m[toff + b * dj : toff + (b + 1) * dj, off + a * dj : off + (a + 1) * dj] = Dj.act(c)
            if (i, j - 1) in where:
                toff, _ = where[(i, j - 1)]
                dd = D.d(j)
                tj = D.module(j - 1).dim
                sgn = dd if i % 2 == 0 else F.reduce(-dd)
                for a in range(ri):
                    m[toff + a * tj : toff + (a + 1) * tj, off + a * dj : off + (a + 1) * dj] = sgn
        diffs[nn] = m
    # equivariant by construction
    out = ChainComplex(A, mods, diffs, check=False)
    out.layout = layout
    return out


def _tensor_graded(C: GradedComplex, D: GradedComplex) -> GradedComplex:
    R = C.ring
    P = R.poly_ring
    degs = sorted({i + j for i in C.degrees for j in D.degrees})
    layout, mods = {}, {}
    for nn in degs:
        parts, blocks = [], []
        for i in C.degrees:
            j = nn - i
            if j not in D.modules:
                continue
            Ci, Dj = C.modules[i], D.modules[j]
            q = Dj.rank
            shifts = [Ci.shifts[a] + Dj.shifts[c] for a in range(Ci.rank) for c in range(q)]
            gens = [_offset_vec(g, a * q) for a in range(Ci.rank) for g in Dj.gens]
            rels = [_offset_vec(g, a * q) for a in range(Ci.rank) for g in Dj.rels]
            blocks.append(GradedModule(R, Ci.rank * q, shifts, gens, rels))
            parts.append((i, j))
        mods[nn], offs = _graded_direct_sum(R, blocks)
        layout[nn] = {pj: o for pj, o in zip(parts, offs)}
    diffs = {}
    for nn in degs:
        if nn - 1 not in mods:
            continue
        cols = []
        tgt = layout[nn - 1]
        for (i, j), off in layout[nn].items():
            Ci, Dj = C.modules[i], D.modules[j]
            q = Dj.rank
            dC = C.diffs.get(i)
            dD = D.diffs.get(j)
            for a in range(Ci.rank):
                for c in range(q):
                    col: Vec = {}
                    if dC is not None and (i - 1, j) in tgt:
                        toff = tgt[(i - 1, j)]
                        # d(e_a) = sum_b c_ba e_b, contributes c_ba e_(b, c)
                        for (b, e), v in dC[a].items():
                            col = vec_add(col, {(toff + b * q + c, e): v}, R.field)
                    if dD is not None and (i, j - 1) in tgt:
                        toff = tgt[(i, j - 1)]
                        qq = D.modules[j - 1].rank
                        img = dD[c] if i % 2 == 0 else vec_mul_poly(dD[c], P.const(-1))
                        col = vec_add(col, _offset_vec(img, toff + a * qq), R.field)
                    cols.append(col)
        diffs[nn] = cols
    out = GradedComplex(R, mods, diffs)
    out.layout = layout
    return out


def module_complex(M, degree: int = 0):
    """M concentrated in one degree."""
    if isinstance(M, FGModule):
        return ChainComplex(M.algebra, {degree: M}, {}, check=False)
    return GradedComplex(M.ring, {degree: M}, {})


def hom_complex(C, D):
    """Hom_A(C, D) with Hom_n = prod_i Hom(C_i, D_{i+n}).

    C may be a module (placed in degree 0).  Over the graded engine C must be
    a single cokernel module and D a complex of free modules.
    """
    if isinstance(C, (FGModule, GradedModule)):
        C = module_complex(C)
    if isinstance(C, ChainComplex):
        return _hom_artin(C, D)
    return _hom_graded(C, D)


def _hom_artin(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    if _is_free_complex(C):
        return _hom_artin_free(C, D)
    A = C.ring
    F = A.field
    degs = sorted({j - i for i in C.degrees for j in D.degrees})
    spaces: dict[int, list] = {}
    mods = {}
    for n in degs:
        parts, off = [], 0
        for i in C.degrees:
            if i + n in D.modules:
                H = HomSpace(C.modules[i], D.modules[i + n])
                parts.append((i, H, off))
                off += H.dim
        spaces[n] = parts
        ms = [H.module() for (_, H, _) in parts]
        mods[n] = _block_diag_modules(ms) if ms else FGModule.zero(A)
    diffs = {}
    for n in degs:
        if n - 1 not in mods:
            continue
        m = F.zeros((mods[n - 1].dim, mods[n].dim))
        tgt = {i: (H, off) for (i, H, off) in spaces[n - 1]}
        sgn = -1 if n % 2 == 0 else 1  # -(-1)^n
        for i, H, off in spaces[n]:
            if H.dim == 0:
                continue
            # d_D ∘ f_i lands in Hom(C_i, D_{i+n-1})
            if i in tgt and (i + n) in D.diffs:
                Ht, toff = tgt[i]
                blk = hom_matrix(H, Ht, post=D.d(i + n), F=F)
                m[toff : toff + Ht.dim, off : off + H.dim] = F.reduce(m[toff : toff + Ht.dim, off : off + H.dim] + blk)
            # -(-1)^n f_i ∘ d_C lands in Hom(C_{i+1}, D_{i+n})
            if (i + 1) in tgt and (i + 1) in C.diffs:
                Ht, toff = tgt[i + 1]
                blk = hom_matrix(H, Ht, pre=C.d(i + 1), F=F)
                m[toff : toff + Ht.dim, off : off + H.dim] = F.reduce(m[toff : toff + Ht.dim, off : off + H.dim] + sgn * blk)
        diffs[n] = m
    return ChainComplex(A, mods, diffs, check=False)


def _hom_artin_free(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    # Hom(A^b, N) = N^b through the images of the generators
    A = C.ring
    F = A.field
    degs = sorted({j - i for i in C.degrees for j in D.degrees})
    layout: dict[int, list] = {}
    mods = {}
    for k in degs:
        parts, off = [], 0
        for i in C.degrees:
            if i + k in D.modules:
                b, N = C.modules[i].free_rank, D.modules[i + k]
                parts.append((i, off, b, N))
                off += b * N.dim
        layout[k] = parts
        blocks = [N.power(b) for (_, _, b, N) in parts]
        mods[k] = _block_diag_modules(blocks) if blocks else FGModule.zero(A)
    diffs = {}
    for k in degs:
        if k - 1 not in mods:
            continue
        m = F.zeros((mods[k - 1].dim, mods[k].dim))
        tgt = {i: (off, N) for (i, off, _, N) in layout[k - 1]}
        sgn = -1 if k % 2 == 0 else 1  # -(-1)^k
        for i, off, b, N in layout[k]:
            dN = N.dim
            if i in tgt and (i + k) in D.diffs:
                toff, T = tgt[i]
                dd = D.d(i + k)
                for t in range(b):
                    m[toff + t * T.dim : toff + (t + 1) * T.dim, off + t * dN : off + (t + 1) * dN] += dd
            if (i + 1) in tgt and (i + 1) in C.diffs:
                toff, _ = tgt[i + 1]
                ent = _entry_elements(C, i + 1)
                for t, row in enumerate(ent):
                    for s_, c in enumerate(row):
                        if np.any(c != 0):
                            m[toff + s_ * dN : toff + (s_ + 1) * dN, off + t * dN : off + (t + 1) * dN] += sgn * N.act(c)
        diffs[k] = F.reduce(m)
    return ChainComplex(A, mods, diffs, check=False)


def graded_hom_module(M: GradedModule, target_rank: int, target_shifts: Sequence[int]) -> GradedModule:
    """Hom_R(M, R^c) as a submodule of R^{r c}; component j*r + k holds the
    coefficient of e'_j in the image of the k-th generator of M."""
    if not M.is_cokernel:
        raise ComplexError("graded Hom needs a cokernel presentation of the source")
    R = M.ring
    r = M.rank
    if M.rels:
        cols = []
        for k in range(r):
            col: Vec = {}
            for l, n in enumerate(M.rels):
                for (c, e), v in n.items():
                    if c == k:
                        col[(l, e)] = v
            cols.append(col)
        phis = syzygies(cols, len(M.rels), R.poly_ring, R.ideal)
    else:
        one = (0,) * R.nvars
        phis = [{(k, one): 1} for k in range(r)]
    shifts = [target_shifts[j] - M.shifts[k] for j in range(target_rank) for k in range(r)]
    gens = [_offset_vec(p, j * r) for j in range(target_rank) for p in phis]
    return GradedModule(R, target_rank * r, shifts, gens, [])


def _hom_graded(C: GradedComplex, D: GradedComplex) -> GradedComplex:
    if len(C.modules) != 1:
        raise ComplexError("graded Hom supports a module source only")
    (i0, M), = C.modules.items()
    if not _is_free_complex(D):
        raise ComplexError("graded Hom needs a free target complex")
    R = C.ring
    r = M.rank
    mods = {j - i0: graded_hom_module(M, N.rank, N.shifts) for j, N in D.modules.items()}
    diffs = {}
    for j, cols in D.diffs.items():
        if j - 1 not in D.modules:
            continue
        out = []
        for j0 in range(D.modules[j].rank):
            for k in range(r):
                out.append({(j1 * r + k, e): v for (j1, e), v in cols[j0].items()})
        diffs[j - i0] = out
    return GradedComplex(R, mods, diffs)


__all__ = [
    "Amplitude",
    "ChainComplex",
    "ComplexError",
    "KoszulComplex",
    "cone",
    "homology",
    "hom_complex",
    "koszul",
    "koszul_object",
    "koszul_on_module",
    "module_complex",
    "scalar_chain_map",
    "shift",
    "sup_inf_amp",
    "tensor",
    "wedge",
]
