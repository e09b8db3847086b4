"""Minimal free resolutions, Ext and Tor, series prefixes, reflexivity tests.

Each resolution step only looks at the previous differential, so a literal
repetition d_{s+p} == d_s (s >= 1) of normalized matrices proves that the
resolution repeats forever from there on.  Every infinite-tail claim made in
this module rests on such a certificate or on the resolution terminating.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .artin import FGModule, FiniteLocalAlgebra, HomSpace
from .graded import GradedModule, GradedQuotientRing, kernel_of_map
from .groebner import Vec, vec_degree
from .linalg import Subspace, kernel, rank

DEFAULT_CUTOFF = 10
# Ext scans stop before a free module of larger rank would be built; over
# rings of exponential growth a cutoff of 10 is otherwise out of reach
RANK_BUDGET = 300


def over_budget(res: "MinimalFreeResolution", i: int) -> bool:
    """F_i is already too large to resolve further."""
    return i < len(res.betti) and res.betti[i] > RANK_BUDGET


class ResolutionTooShort(ValueError):
    """The resolution has not been computed far enough; call extend()."""


class Certification(str, enum.Enum):
    YES = "certified-yes"
    NO = "certified-no"
    INCONCLUSIVE = "inconclusive-up-to-cutoff"


@dataclass(frozen=True)
class PeriodicityCertificate:
    period: int
    onset: int
    kind: str = "periodic"  # or "terminated"

    def covers(self, i: int) -> bool:
        return i >= self.onset


# ---------------------------------------------------------------------------
# resolutions


class MinimalFreeResolution:
    """F_b -> ... -> F_0 -> M, computed lazily.

    ``matrices[i-1]`` is d_i.  Over the artinian engine d_i is an array of
    algebra elements of shape (b_{i-1}, b_i, dim A); over the graded engine it
    is a list of b_i column vectors in F_{i-1}.
    """

    def __init__(self, module, length: int = DEFAULT_CUTOFF):
        self.module = module
        self.graded = isinstance(module, GradedModule)
        self.ring = module.ring if self.graded else module.algebra
        self.betti: list[int] = []
        self.shifts: list[list[int]] = []
        self.matrices: list = []
        self.syzygy_spaces: list = []  # kernel of d_i (artin: Subspace; graded: generator list)
        self.terminated = False
        self._kernel = None
        self._start()
        self.extend(length)

    def __repr__(self) -> str:
        return f"MinimalFreeResolution(betti={self.betti}, terminated={self.terminated})"

    @property
    def length(self) -> int:
        return len(self.matrices)

    # artinian steps ---------------------------------------------------------
    def _start(self):
        M = self.module
        if self.graded:
            gens = M.minimal_generators()
            self.augmentation = gens
            self.betti.append(len(gens))
            sh = [M.degree(g) for g in gens]
            self.shifts.append(sh)
            src = GradedModule.free(self.ring, len(gens), sh)
            self._kernel = kernel_of_map(self.ring, src, gens, M) if gens else []
        else:
            gens = M.minimal_generators()
            A = self.ring
            n = A.dim
            b = len(gens)
            eps = A.field.zeros((M.dim, n * b))
            if b:
                imgs = M._images(np.stack(gens))  # (j, t, dim)
                eps = np.transpose(imgs, (1, 0, 2)).reshape(n * b, M.dim).T.copy()
            self.augmentation = eps
            self.betti.append(b)
            self._kernel = kernel(eps, A.field) if b else Subspace.zero(0, A.field)
        if self._kernel_is_zero():
            self.terminated = True

    def _kernel_is_zero(self) -> bool:
        if self.graded:
            return len(self._kernel) == 0
        return self._kernel.dim == 0

    def _step(self):
        if self.graded:
            self._step_graded()
        else:
            self._step_artin()
        if self._kernel_is_zero():
            self.terminated = True

    def _step_artin(self):
        A: FiniteLocalAlgebra = self.ring
        F, n = A.field, A.dim
        b_prev = self.betti[-1]
        Fm = FGModule.free(A, b_prev)
        gens = Fm.minimal_generators(self._kernel)
        b = len(gens)
        entries = F.zeros((b_prev, b, n))
        for s, g in enumerate(gens):
            entries[:, s, :] = g.reshape(b_prev, n)
        self.matrices.append(entries)
        self.syzygy_spaces.append(self._kernel)
        self.betti.append(b)
        d = self.k_matrix(len(self.matrices))
        self._kernel = kernel(d, F)

    def _step_graded(self):
        R: GradedQuotientRing = self.ring
        b_prev = self.betti[-1]
        sh_prev = self.shifts[-1]
        K = GradedModule(R, b_prev, sh_prev, self._kernel, [])
        gens = K.minimal_generators()
        sh = [vec_degree(g, sh_prev) for g in gens]
        self.matrices.append(gens)
        self.syzygy_spaces.append(list(self._kernel))
        self.betti.append(len(gens))
        self.shifts.append(sh)
        src = GradedModule.free(R, len(gens), sh)
        tgt = GradedModule.free(R, b_prev, sh_prev)
        self._kernel = kernel_of_map(R, src, gens, tgt)

    def extend(self, length: int) -> "MinimalFreeResolution":
        while len(self.matrices) < length and not self.terminated:
            self._step()
        return self

    # views ------------------------------------------------------------------
    def k_matrix(self, i: int) -> np.ndarray:
        """d_i as a k-linear map A^{b_i} -> A^{b_{i-1}} (artinian engine)."""
        A = self.ring
        F, n = A.field, A.dim
        if i > len(self.matrices):
            if self.terminated:
                return F.zeros((n * self.betti_number(i - 1), 0))
            raise ResolutionTooShort(f"d_{i} not computed")
        entries = self.matrices[i - 1]
        bp, b = entries.shape[0], entries.shape[1]
        if b == 0:
            return F.zeros((n * bp, 0))
        free = FGModule.free(A, bp)
        G = np.transpose(entries, (1, 0, 2)).reshape(b, bp * n)
        imgs = free._images(G)  # (j, s, dim)
        return np.transpose(imgs, (1, 0, 2)).reshape(b * n, bp * n).T.copy()

    def betti_number(self, i: int) -> int:
        if i < len(self.betti):
            return self.betti[i]
        if self.terminated:
            return 0
        raise ResolutionTooShort(f"b_{i} not computed")

    def entry(self, i: int, t: int, s: int):
        """The (t, s) entry of d_i as a ring element."""
        if self.graded:
            from .poly import Polynomial

            return Polynomial(self.ring.poly_ring, {e: v for (c, e), v in self.matrices[i - 1][s].items() if c == t})
        return self.matrices[i - 1][t, s]

    def is_minimal(self) -> bool:
        """Every entry of every differential lies in the maximal ideal."""
        for i in range(1, len(self.matrices) + 1):
            if self.graded:
                for col in self.matrices[i - 1]:
                    if any(sum(e) == 0 for (_, e) in col):
                        return False
            elif np.any(self.matrices[i - 1][:, :, 0] != 0):
                return False
        return True

    def syzygy_module(self, i: int):
        """The i-th syzygy module (0: M itself)."""
        if i == 0:
            return self.module
        self.extend(i)
        if i > len(self.matrices):
            return FGModule.zero(self.ring) if not self.graded else GradedModule(self.ring, 0, [], [], [])
        if self.graded:
            return GradedModule(self.ring, self.betti[i - 1], self.shifts[i - 1], self.syzygy_spaces[i - 1], [])
        return FGModule.free(self.ring, self.betti[i - 1]).submodule(self.syzygy_spaces[i - 1])

    def is_exact(self) -> bool:
        """ker d_i = im d_{i+1} at every computed step (artinian engine)."""
        if self.graded:
            return True
        F = self.ring.field
        for i in range(1, len(self.matrices)):
            ker = kernel(self.k_matrix(i), F)
            d = self.k_matrix(i + 1)
            im = Subspace(d.T.copy(), d.shape[0], F) if d.shape[1] else Subspace.zero(d.shape[0], F)
            if ker != im:
                return False
        return True

    def certificate(self) -> PeriodicityCertificate | None:
        return detect_periodicity(self)


def resolve_minimal(M, length: int = DEFAULT_CUTOFF) -> MinimalFreeResolution:
    return MinimalFreeResolution(M, length)


def _same_matrix(res: MinimalFreeResolution, i: int, j: int) -> bool:
    a, b = res.matrices[i - 1], res.matrices[j - 1]
    if res.graded:
        if a != b:
            return False
        # shifts must differ by a constant so the next steps order generators alike
        da = [x - y for x, y in zip(res.shifts[i], res.shifts[j])]
        db = [x - y for x, y in zip(res.shifts[i - 1], res.shifts[j - 1])]
        return len(set(da + db)) <= 1
    return a.shape == b.shape and np.array_equal(a, b)


def detect_periodicity(res: MinimalFreeResolution, max_period: int = 4) -> PeriodicityCertificate | None:
    """Certificate from termination or from a literal repeat d_{s+p} == d_s, s >= 1."""
    if res.terminated:
        return PeriodicityCertificate(period=1, onset=len(res.matrices) + 1, kind="terminated")
    N = len(res.matrices)
    for s in range(1, N + 1):
        for p in range(1, max_period + 1):
            if s + p <= N and _same_matrix(res, s, s + p):
                return PeriodicityCertificate(period=p, onset=s)
    return None


# ---------------------------------------------------------------------------
# Ext and Tor


def _artin_cochain(res: MinimalFreeResolution, N: FGModule, i: int) -> np.ndarray:
    """delta_i : Hom(F_{i-1}, N) -> Hom(F_i, N), Hom(F_j, N) = N^{b_j}."""
    F = N.field
    d = N.dim
    bp, b = res.betti_number(i - 1), res.betti_number(i)
    out = F.zeros((d * b, d * bp))
    if b == 0 or bp == 0:
        return out
    ent = res.matrices[i - 1]
    for s in range(b):
        for t in range(bp):
            c = ent[t, s]
            if np.any(c != 0):
                out[s * d : (s + 1) * d, t * d : (t + 1) * d] = N.act(c)
    return out


def _artin_chain(res: MinimalFreeResolution, N: FGModule, i: int) -> np.ndarray:
    """partial_i : F_i ⊗ N -> F_{i-1} ⊗ N."""
    F = N.field
    d = N.dim
    bp, b = res.betti_number(i - 1), res.betti_number(i)
    out = F.zeros((d * bp, d * b))
    if b == 0 or bp == 0:
        return out
    ent = res.matrices[i - 1]
    for s in range(b):
        for t in range(bp):
            c = ent[t, s]
            if np.any(c != 0):
                out[t * d : (t + 1) * d, s * d : (s + 1) * d] = N.act(c)
    return out


def _need(res: MinimalFreeResolution, i: int):
    if i > len(res.matrices) and not res.terminated:
        raise ResolutionTooShort(f"resolution computed to length {len(res.matrices)}, need {i}")


def ext_module(res: MinimalFreeResolution, N, i: int):
    """Ext^i(M, N) from a resolution of M, as a module."""
    _need(res, i + 1)
    if res.graded:
        return _graded_ext(res, N, i)
    F = N.field
    bi = res.betti_number(i)
    if bi == 0 or N.dim == 0:
        return FGModule.zero(N.algebra)
    Hom_i = N.power(bi)
    Z = kernel(_artin_cochain(res, N, i + 1), F)
    if i == 0:
        B = Subspace.zero(Hom_i.dim, F)
    else:
        dlt = _artin_cochain(res, N, i)
        B = Subspace(dlt.T.copy(), Hom_i.dim, F) if dlt.shape[1] else Subspace.zero(Hom_i.dim, F)
    return Hom_i.subquotient(Z, B)


def tor_module(res: MinimalFreeResolution, N, i: int):
    """Tor_i(M, N) from a resolution of M."""
    _need(res, i + 1)
    if res.graded:
        return _graded_tor(res, N, i)
    F = N.field
    bi = res.betti_number(i)
    if bi == 0 or N.dim == 0:
        return FGModule.zero(N.algebra)
    T_i = N.power(bi)
    Z = kernel(_artin_chain(res, N, i), F) if i > 0 else Subspace.full(T_i.dim, F)
    nxt = _artin_chain(res, N, i + 1)
    B = Subspace(nxt.T.copy(), T_i.dim, F) if nxt.shape[1] else Subspace.zero(T_i.dim, F)
    return T_i.subquotient(Z, B)


def _graded_blocks(N: GradedModule, b: int, shifts: Sequence[int], sign: int = 1):
    q = N.rank
    sh = [sign * shifts[t] + N.shifts[c] for t in range(b) for c in range(q)]
    gens = [{(t * q + c, e): v for (c, e), v in g.items()} for t in range(b) for g in N.gens]
    rels = [{(t * q + c, e): v for (c, e), v in g.items()} for t in range(b) for g in N.rels]
    return GradedModule(N.ring, b * q, sh, gens, rels)


def _graded_cochain_cols(res: MinimalFreeResolution, q: int, i: int) -> list[Vec]:
    # delta_i : N^{b_{i-1}} -> N^{b_i}; column (t, c) = sum_s d_i[t, s] e_(s, c)
    bp = res.betti_number(i - 1)
    cols: list[Vec] = [dict() for _ in range(bp * q)]
    if i <= len(res.matrices):
        for s, col in enumerate(res.matrices[i - 1]):
            for (t, e), v in col.items():
                for c in range(q):
                    cols[t * q + c][(s * q + c, e)] = v
    return cols


def _graded_chain_cols(res: MinimalFreeResolution, q: int, i: int) -> list[Vec]:
    # partial_i : N^{b_i} -> N^{b_{i-1}}; column (s, c) = sum_t d_i[t, s] e_(t, c)
    b = res.betti_number(i)
    cols: list[Vec] = [dict() for _ in range(b * q)]
    if i <= len(res.matrices):
        for s, col in enumerate(res.matrices[i - 1]):
            for (t, e), v in col.items():
                for c in range(q):
                    cols[s * q + c][(t * q + c, e)] = v
    return cols


def _graded_homology(R, mid: GradedModule, out_cols, out_tgt: GradedModule | None, in_cols, in_src: GradedModule | None):
    from .graded import apply_matrix

    if out_tgt is not None and out_tgt.rank:
        Z = kernel_of_map(R, mid, out_cols, out_tgt)
    else:
        Z = list(mid.gens)
    B = list(mid.rels)
    if in_src is not None and in_src.rank:
        B += [apply_matrix(in_cols, g, R) for g in in_src.gens]
    return GradedModule(R, mid.rank, mid.shifts, Z, B)


def _graded_ext(res: MinimalFreeResolution, N: GradedModule, i: int) -> GradedModule:
    R = res.ring
    q = N.rank
    bi = res.betti_number(i)
    if bi == 0:
        return GradedModule.free(R, 0)
    mid = _graded_blocks(N, bi, res.shifts[i] if bi else [], sign=-1)
    nxt_b = res.betti_number(i + 1)
    nxt = _graded_blocks(N, nxt_b, res.shifts[i + 1] if nxt_b else [], sign=-1) if nxt_b else None
    prev = None
    in_cols = None
    if i > 0:
        prev = _graded_blocks(N, res.betti_number(i - 1), res.shifts[i - 1], sign=-1)
        in_cols = _graded_cochain_cols(res, q, i)
    out_cols = _graded_cochain_cols(res, q, i + 1) if nxt is not None else None
    return _graded_homology(R, mid, out_cols, nxt, in_cols, prev)


def _graded_tor(res: MinimalFreeResolution, N: GradedModule, i: int) -> GradedModule:
    R = res.ring
    q = N.rank
    bi = res.betti_number(i)
    if bi == 0:
        return GradedModule.free(R, 0)
    mid = _graded_blocks(N, bi, res.shifts[i] if bi else [])
    prev = _graded_blocks(N, res.betti_number(i - 1), res.shifts[i - 1]) if i > 0 else None
    out_cols = _graded_chain_cols(res, q, i) if i > 0 else None
    nb = res.betti_number(i + 1)
    nxt = _graded_blocks(N, nb, res.shifts[i + 1]) if nb else None
    in_cols = _graded_chain_cols(res, q, i + 1) if nxt is not None else None
    return _graded_homology(R, mid, out_cols, prev, in_cols, nxt)


def _ring_module(ring):
    if isinstance(ring, GradedQuotientRing):
        return GradedModule.free(ring, 1)
    return FGModule.free(ring, 1)


def residue_field(ring):
    if isinstance(ring, GradedQuotientRing):
        P = ring.poly_ring
        return GradedModule.cyclic(ring, P.gens())
    return FGModule.residue_field(ring)


def ext(M, N, i: int, res: MinimalFreeResolution | None = None):
    res = res or resolve_minimal(M, i + 1)
    res.extend(i + 1)
    return ext_module(res, N, i)


def tor(M, N, i: int, res: MinimalFreeResolution | None = None):
    res = res or resolve_minimal(M, i + 1)
    res.extend(i + 1)
    return tor_module(res, N, i)


def module_dim(M) -> int | None:
    """k-dimension (None for a graded module of infinite length)."""
    if isinstance(M, FGModule):
        return M.dim
    return graded_length(M)


def graded_length(M: GradedModule, max_degree: int = 60) -> int | None:
    from .groebner import reduce_entries, vec_mul_poly
    from .linalg import rank as _rank

    if M.is_zero():
        return 0
    R = M.ring
    P = R.poly_ring
    gens = [g for g in M.gens if M.reduce(g)]
    top = max(M.degree(g) for g in gens)
    lo = min(M.degree(g) for g in gens)
    total = 0
    for d in range(lo, max_degree + 1):
        vecs = []
        for g in gens:
            k = d - M.degree(g)
            if k < 0:
                continue
            for e in P.monomials_of_degree(k):
                w = M.reduce(reduce_entries(vec_mul_poly(g, P.monomial(e)), R.ideal, P))
                if w:
                    vecs.append(w)
        if vecs:
            keys = sorted({key for v in vecs for key in v})
            pos = {key: i for i, key in enumerate(keys)}
            mat = R.field.zeros((len(vecs), len(keys)))
            for r, v in enumerate(vecs):
                for key, a in v.items():
                    mat[r, pos[key]] = a
            dd = _rank(mat, R.field)
        else:
            dd = 0
        total += dd
        if dd == 0 and d >= top:
            return total
    return None


@dataclass
class ExtProfile:
    """dim Ext^i (or a zero flag over the graded engine) for i = 0..cutoff."""

    values: list  # ints, or bools "nonzero" for the graded engine
    certificate: PeriodicityCertificate | None
    modules: list = field(default_factory=list, repr=False)
    stopped_at: int | None = None  # first degree skipped because of RANK_BUDGET

    @property
    def cutoff(self) -> int:
        return len(self.values) - 1

    def nonzero(self, i: int) -> bool:
        v = self.values[i]
        return bool(v)

    def tail_certified_zero(self, start: int) -> bool:
        """Every Ext^i with i >= start vanishes (provably)."""
        c = self.certificate
        if c is None:
            return False
        if any(self.nonzero(i) for i in range(start, len(self.values))):
            return False
        if c.kind == "terminated":
            # F_i = 0 for i >= onset
            return c.onset - 1 <= self.cutoff
        # for i >= onset, Ext^i depends only on (d_i, d_{i+1}) and repeats with the period
        first = max(c.onset, start)
        return first + c.period - 1 <= self.cutoff

    def nonzero_degrees(self) -> list[int]:
        return [i for i in range(len(self.values)) if self.nonzero(i)]


def _is_zero_module(X) -> bool:
    return X.is_zero()


def ext_profile(
    M,
    N,
    cutoff: int = DEFAULT_CUTOFF,
    res: MinimalFreeResolution | None = None,
    keep_modules: bool = False,
    stop_at_nonzero: int | None = None,
) -> ExtProfile:
    """Ext^i(M, N) for i = 0..cutoff.

    With ``stop_at_nonzero=j`` the scan ends at the first nonvanishing
    Ext^i with i >= j, so the profile may be shorter than the cutoff.
    """
    res = res or resolve_minimal(M, 1)
    vals, mods, stopped = [], [], None
    for i in range(cutoff + 1):
        if over_budget(res, i):
            stopped = i
            break
        res.extend(i + 1)
        X = ext_module(res, N, i)
        vals.append(X.dim if isinstance(X, FGModule) else (not X.is_zero()))
        if keep_modules:
            mods.append(X)
        if stop_at_nonzero is not None and i >= stop_at_nonzero and vals[-1]:
            break
    cert = detect_periodicity(res)
    if cert is not None and cert.kind == "periodic" and cert.onset + cert.period > len(vals):
        cert = None
    return ExtProfile(vals, cert, mods, stopped)


@dataclass(frozen=True)
class SeriesPrefix:
    coefficients: tuple[int, ...]
    certified_complete: bool
    period: int | None = None
    onset: int | None = None


def poincare_prefix(M, length: int = DEFAULT_CUTOFF) -> SeriesPrefix:
    """c_i = dim Tor_i(k, M), computed as Tor_i(M, k) from a resolution of M."""
    res = resolve_minimal(M, length + 1)
    k = residue_field(res.ring)
    coeffs = []
    for i in range(length + 1):
        T = tor_module(res, k, i)
        coeffs.append(module_dim(T))
    cert = detect_periodicity(res)
    return SeriesPrefix(tuple(coeffs), cert is not None, cert.period if cert else None, cert.onset if cert else None)


def bass_prefix(M, length: int = DEFAULT_CUTOFF) -> SeriesPrefix:
    """c_i = dim Ext^i(k, M)."""
    ring = M.ring if isinstance(M, GradedModule) else M.algebra
    k = residue_field(ring)
    res = resolve_minimal(k, length + 1)
    coeffs = [module_dim(ext_module(res, M, i)) for i in range(length + 1)]
    cert = detect_periodicity(res)
    return SeriesPrefix(tuple(coeffs), cert is not None, cert.period if cert else None, cert.onset if cert else None)


# ---------------------------------------------------------------------------
# totally reflexive modules and G-dimension


def dual_module(M: FGModule) -> tuple[FGModule, HomSpace]:
    """M* = Hom_A(M, A)."""
    H = HomSpace(M, M.algebra.regular_module())
    return H.module(), H


def biduality_map(M: FGModule) -> tuple[np.ndarray, int]:
    """Matrix of M -> M** and dim M**."""
    A = M.algebra
    F = A.field
    Mstar, H1 = dual_module(M)
    H2 = HomSpace(Mstar, A.regular_module())
    phis = H1.maps()
    cols = []
    for j in range(M.dim):
        m = F.zeros(M.dim)
        m[j] = 1
        ev = np.stack([F.matmul(p, m) for p in phis], axis=1) if phis else F.zeros((A.dim, 0))
        cols.append(H2.coords(ev))
    mat = np.stack(cols, axis=1) if cols else F.zeros((H2.dim, 0))
    return mat, H2.dim


def is_reflexive(M: FGModule) -> bool:
    mat, d2 = biduality_map(M)
    return d2 == M.dim and rank(mat, M.field) == M.dim if M.dim else d2 == 0


@dataclass
class ReflexivityReport:
    status: Certification
    reason: str
    ext_module: list
    ext_dual: list
    reflexive: bool
    certificates: dict

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "reason": self.reason,
            "ext_M_A": self.ext_module,
            "ext_Mdual_A": self.ext_dual,
            "biduality_iso": self.reflexive,
            "certificates": self.certificates,
        }


def _cert_dict(c: PeriodicityCertificate | None):
    return None if c is None else {"kind": c.kind, "period": c.period, "onset": c.onset}


def totally_reflexive_test(M: FGModule, cutoff: int = DEFAULT_CUTOFF) -> ReflexivityReport:
    A = M.algebra
    Areg = A.regular_module()
    res = resolve_minimal(M, 1)
    if res.terminated and len(res.matrices) == 0:
        return ReflexivityReport(Certification.YES, "free module", [0] * cutoff, [0] * cutoff, True, {"module": _cert_dict(detect_periodicity(res))})
    p1 = ext_profile(M, Areg, cutoff, res, stop_at_nonzero=1)
    Mstar, _ = dual_module(M)
    p2 = ext_profile(Mstar, Areg, cutoff, stop_at_nonzero=1) if not any(p1.values[1:]) else ExtProfile([0], None)
    e1, e2 = p1.values[1:], p2.values[1:]
    refl = is_reflexive(M)
    certs = {"module": _cert_dict(p1.certificate), "dual": _cert_dict(p2.certificate)}
    if any(e1):
        i = 1 + next(k for k, v in enumerate(e1) if v)
        return ReflexivityReport(Certification.NO, f"Ext^{i}(M, A) != 0", e1, e2, refl, certs)
    if any(e2):
        i = 1 + next(k for k, v in enumerate(e2) if v)
        return ReflexivityReport(Certification.NO, f"Ext^{i}(M*, A) != 0", e1, e2, refl, certs)
    if not refl:
        return ReflexivityReport(Certification.NO, "M -> M** is not an isomorphism", e1, e2, refl, certs)
    if p1.tail_certified_zero(1) and p2.tail_certified_zero(1):
        return ReflexivityReport(Certification.YES, "vanishing certified by periodic or finite resolutions", e1, e2, refl, certs)
    if A.is_gorenstein():
        # A self-injective: Ext^i(-, A) = 0 for all i >= 1
        return ReflexivityReport(Certification.YES, "ring is self-injective", e1, e2, refl, certs)
    reach = min(p1.cutoff, p2.cutoff)
    return ReflexivityReport(Certification.INCONCLUSIVE, f"vanishing up to {reach} without a certificate", e1, e2, refl, certs)


@dataclass
class GdimEstimate:
    value: int | None
    status: str  # "certified" | "lower-bound" | "unknown"
    ext_dims: list
    reason: str = ""

    def as_dict(self) -> dict:
        return {"value": self.value, "status": self.status, "ext_M_A": self.ext_dims, "reason": self.reason}


def gdim_estimate(M: FGModule, cutoff: int = DEFAULT_CUTOFF) -> GdimEstimate:
    A = M.algebra
    res = resolve_minimal(M, 1)
    prof = ext_profile(M, A.regular_module(), cutoff, res)
    vals = prof.values
    if res.terminated:
        pd = len(res.matrices)
        return GdimEstimate(pd, "certified", vals, "finite projective dimension")
    nz = prof.nonzero_degrees()
    g = max(nz) if nz else 0
    if A.is_gorenstein() and nz == [0]:
        return GdimEstimate(0, "certified", vals, "ring is self-injective")
    if prof.tail_certified_zero(g + 1):
        syz = res.syzygy_module(g)
        rep = totally_reflexive_test(syz, cutoff)
        if rep.status == Certification.YES:
            return GdimEstimate(g, "certified", vals, f"syzygy {g} totally reflexive; Ext tail certified zero")
    if nz:
        return GdimEstimate(g, "lower-bound", vals, "largest nonvanishing Ext up to the cutoff")
    return GdimEstimate(None, "unknown", vals, "no certificate")


__all__ = [
    "Certification",
    "DEFAULT_CUTOFF",
    "ExtProfile",
    "GdimEstimate",
    "MinimalFreeResolution",
    "PeriodicityCertificate",
    "RANK_BUDGET",
    "ReflexivityReport",
    "ResolutionTooShort",
    "SeriesPrefix",
    "bass_prefix",
    "biduality_map",
    "detect_periodicity",
    "dual_module",
    "ext",
    "ext_module",
    "ext_profile",
    "gdim_estimate",
    "graded_length",
    "is_reflexive",
    "module_dim",
    "poincare_prefix",
    "resolve_minimal",
    "residue_field",
    "tor",
    "tor_module",
    "totally_reflexive_test",
]
