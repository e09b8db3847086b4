"""Finite-dimensional local algebras given by a multiplication tensor.

Basis vector 0 is the unit and the remaining basis vectors span the maximal
ideal.  Elements are coefficient vectors; ideals are :class:`IdealSubspace`
objects (canonical rref bases), so equality of ideals is a literal comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .graded import GradedQuotientRing, NotArtinianError
from .groebner import GroebnerBasis, buchberger, monomial_krull_dim, standard_monomials_of_degree
from .linalg import GF101, Subspace, kernel, rref, span
from .poly import Polynomial, PolynomialRing


class AlgebraError(ValueError):
    """A multiplication table or module action violates an algebra axiom."""


class IdealSubspace(Subspace):
    """A subspace of an algebra that is closed under multiplication."""

    __slots__ = ("algebra",)

    @classmethod
    def of(cls, algebra: "FiniteLocalAlgebra", space: Subspace, check: bool = True) -> "IdealSubspace":
        out = cls._raw(space.basis, space.pivots, space.n, space.F)
        out.algebra = algebra
        if check and not algebra.is_ideal(space):
            raise AlgebraError("subspace is not an ideal")
        return out

    def __repr__(self) -> str:
        return f"IdealSubspace(dim={self.dim}, algebra_dim={self.n})"

    def generators(self) -> list[np.ndarray]:
        return self.algebra.regular_module().minimal_generators(self)

    @property
    def num_generators(self) -> int:
        return len(self.generators())

    def as_module(self) -> "FGModule":
        return self.algebra.regular_module().submodule(self)

    def quotient_module(self) -> "FGModule":
        return self.algebra.regular_module().quotient(self)


def _table_products(T: np.ndarray, a: np.ndarray, b: np.ndarray, F) -> np.ndarray:
    return F.reduce(np.einsum("i,j,ijk->k", a, b, T))


class FiniteLocalAlgebra:
    """A commutative local k-algebra of finite dimension with unit e_0.

    ``table[i, j]`` is the coefficient vector of e_i * e_j.
    """

    engine = "artinian"

    def __init__(self, table, labels: Sequence[str] | None = None, field=GF101, check: bool = True):
        T = np.array(table, dtype=field.dtype)
        if T.ndim != 3 or not (T.shape[0] == T.shape[1] == T.shape[2]) or T.shape[0] == 0:
            raise AlgebraError("table must have shape (n, n, n) with n >= 1")
        self.field = field
        self.table = field.reduce(T)
        self.dim = T.shape[0]
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(self.dim)]
        # optional presentation data, filled in by from_presentation / quotient
        self.poly_ring: PolynomialRing | None = None
        self.relations_gb: GroebnerBasis | None = None
        self._lift = None
        if check:
            self.verify()

    def __repr__(self) -> str:
        return f"FiniteLocalAlgebra(dim={self.dim})"

    # validation ------------------------------------------------------------
    def verify(self):
        F, T, n = self.field, self.table, self.dim
        if not np.array_equal(T[0], F.eye(n)) or not np.array_equal(T[:, 0], F.eye(n)):
            raise AlgebraError("e_0 is not a two-sided unit")
        if not np.array_equal(T, T.transpose(1, 0, 2)):
            raise AlgebraError("multiplication is not commutative")
        # (e_i e_j) e_k == e_i (e_j e_k)
        left = F.reduce(np.einsum("ijm,mkl->ijkl", T, T))
        right = F.reduce(np.einsum("jkm,iml->ijkl", T, T))
        if not np.array_equal(left, right):
            raise AlgebraError("multiplication is not associative")
        if n > 1 and np.any(T[1:, 1:, 0] != 0):
            raise AlgebraError("span(e_1..e_n-1) is not closed under multiplication")
        # the maximal ideal must be nilpotent
        m = self.maximal_ideal_space()
        power = m
        for _ in range(n + 1):
            if power.dim == 0:
                break
            power = self.product_space(power, m)
        else:
            raise AlgebraError("maximal ideal is not nilpotent")
        if power.dim:
            raise AlgebraError("maximal ideal is not nilpotent")

    # elements --------------------------------------------------------------
    def zero_elt(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def one_elt(self) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[0] = 1
        return v

    def basis_elt(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = 1
        return v

    def element(self, x) -> np.ndarray:
        """Coerce a vector, polynomial, polynomial text or scalar to a vector."""
        if isinstance(x, np.ndarray):
            if x.shape != (self.dim,):
                raise ValueError("element vector has the wrong length")
            return self.field.reduce(x.astype(self.field.dtype))
        if isinstance(x, (list, tuple)):
            return self.element(np.array(x, dtype=self.field.dtype))
        if isinstance(x, (int, np.integer)):
            return self.field.reduce(self.one_elt() * int(x))
        if isinstance(x, str):
            if self.poly_ring is None:
                raise ValueError("this algebra has no polynomial presentation")
            x = self.poly_ring.parse(x)
        if isinstance(x, Polynomial):
            if self._lift is None:
                raise ValueError("this algebra has no polynomial presentation")
            return self._lift(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to an algebra element")

    def add(self, a, b):
        return self.field.reduce(a + b)

    def neg(self, a):
        return self.field.reduce(-a)

    def scal(self, c, a):
        return self.field.reduce(a * self.field.elt(c))

    def mul(self, a, b) -> np.ndarray:
        return _table_products(self.table, a, b, self.field)

    def is_zero(self, a) -> bool:
        return not np.any(a != 0)

    def equal(self, a, b) -> bool:
        return np.array_equal(self.field.reduce(a - b), self.zero_elt())

    def is_unit(self, a) -> bool:
        return a[0] != 0

    def in_maximal_ideal(self, a) -> bool:
        return a[0] == 0

    def mult_matrix(self, a) -> np.ndarray:
        """Matrix of b -> a*b (column j is a*e_j)."""
        return self.field.reduce(np.einsum("i,ijk->kj", a, self.table))

    def elt_str(self, a) -> str:
        F = self.field
        parts = []
        for i in np.flatnonzero(a):
            c = F.signed(a[i])
            lab = self.labels[i]
            body = lab if abs(c) == 1 and lab != "1" else (str(abs(c)) if lab == "1" else f"{abs(c)}*{lab}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    # subspaces and ideals ------------------------------------------------
    def maximal_ideal_space(self) -> Subspace:
        return Subspace(self.field.eye(self.dim)[1:], self.dim, self.field)

    def maximal_ideal(self) -> IdealSubspace:
        return IdealSubspace.of(self, self.maximal_ideal_space(), check=False)

    def zero_ideal(self) -> IdealSubspace:
        return IdealSubspace.of(self, Subspace.zero(self.dim, self.field), check=False)

    def unit_ideal(self) -> IdealSubspace:
        return IdealSubspace.of(self, Subspace.full(self.dim, self.field), check=False)

    def product_space(self, U: Subspace, V: Subspace) -> Subspace:
        if U.dim == 0 or V.dim == 0:
            return Subspace.zero(self.dim, self.field)
        prods = self.field.reduce(np.einsum("ai,bj,ijk->abk", U.basis, V.basis, self.table))
        return span(prods.reshape(-1, self.dim), self.dim, self.field)

    def is_ideal(self, U: Subspace) -> bool:
        return U.contains_space(self.product_space(Subspace.full(self.dim, self.field), U))

    def ideal(self, gens) -> IdealSubspace:
        """The ideal generated by the given elements."""
        gens = [self.element(g) for g in gens]
        if not gens:
            return self.zero_ideal()
        G = span(gens, self.dim, self.field)
        return IdealSubspace.of(self, self.product_space(Subspace.full(self.dim, self.field), G), check=False)

    def ideal_product(self, I: Subspace, J: Subspace) -> IdealSubspace:
        return IdealSubspace.of(self, self.product_space(I, J), check=False)

    def annihilator(self, S) -> IdealSubspace:
        """ann(S) for an element, a list of elements, or a subspace."""
        if isinstance(S, Subspace):
            gens = list(S.basis)
        elif isinstance(S, (list, tuple)) and S and not np.isscalar(S[0]):
            gens = [self.element(g) for g in S]
        else:
            gens = [self.element(S)]
        if not gens:
            return self.unit_ideal()
        stacked = np.concatenate([self.mult_matrix(g) for g in gens], axis=0)
        return IdealSubspace.of(self, kernel(stacked, self.field), check=False)

    @cached_property
    def socle(self) -> IdealSubspace:
        return self.annihilator(self.maximal_ideal_space())

    def is_gorenstein(self) -> bool:
        return self.socle.dim == 1

    def embedding_dimension(self) -> int:
        m = self.maximal_ideal_space()
        return m.dim - self.product_space(m, m).dim

    def loewy_length(self) -> int:
        m = self.maximal_ideal_space()
        power, k = Subspace.full(self.dim, self.field), 0
        while power.dim:
            power = self.product_space(power, m)
            k += 1
        return k

    # modules and quotients ----------------------------------------------------
    def regular_module(self) -> "FGModule":
        return FGModule.free(self, 1)

    def quotient(self, J: Subspace) -> tuple["FiniteLocalAlgebra", np.ndarray]:
        """A/J together with the projection matrix A -> A/J."""
        if J.contains(self.one_elt()):
            raise AlgebraError("cannot divide by the unit ideal")
        keep = J.complement_coords()
        F = self.field
        n2 = len(keep)

        def proj(v):
            return J.reduce(v)[..., keep]

        prods = self.table[np.ix_(keep, keep)]
        T2 = F.reduce(proj(prods.reshape(-1, self.dim)).reshape(n2, n2, n2))
        Q = FiniteLocalAlgebra(T2, [self.labels[i] for i in keep], F, check=False)
        P = F.zeros((n2, self.dim))
        for j in range(self.dim):
            P[:, j] = proj(self.basis_elt(j))
        Q.poly_ring = self.poly_ring
        if self._lift is not None:
            parent_lift = self._lift
            Q._lift = lambda f: F.matmul(P, parent_lift(f))
        Q.relations_gb = None
        return Q, P

    def quotient_by(self, gens) -> tuple["FiniteLocalAlgebra", np.ndarray]:
        return self.quotient(self.ideal(gens))


def from_presentation(ring: PolynomialRing, relations: Sequence, check: bool = True) -> FiniteLocalAlgebra:
    """k[x]/I as a finite local algebra; I must be m-primary.

    Homogeneous input goes through the graded staircase.  Inhomogeneous input
    is accepted when every relation has zero constant term and the quotient is
    finite-dimensional with a nilpotent maximal ideal.
    """
    rels = [ring.parse(r) if isinstance(r, str) else r for r in relations]
    rels = [r for r in rels if not r.is_zero()]
    if all(r.is_homogeneous() for r in rels):
        R = GradedQuotientRing(ring, rels)
        gb = R.ideal
        basis = R.quotient_basis()
    else:
        for r in rels:
            if r.constant_term() != 0:
                raise NotArtinianError(f"relation {r} has a nonzero constant term; the ideal is not in the maximal ideal")
        gb = buchberger(rels, ring)
        if monomial_krull_dim(ring.nvars, gb.leading_exps) != 0:
            raise NotArtinianError("the quotient is not finite-dimensional")
        basis, d = [], 0
        # the staircase is an order ideal, so the first empty degree ends it
        while block := standard_monomials_of_degree(ring, gb.leading_exps, d):
            basis.extend(block)
            d += 1
        # m-primary: m^len(basis) must vanish in the quotient
        N = len(basis)
        for e in ring.monomials_of_degree(N):
            if not gb.normal_form(ring.monomial(e)).is_zero():
                raise NotArtinianError("the ideal is not primary to the maximal ideal")
    basis = _order_basis(ring, basis)
    index = {e: i for i, e in enumerate(basis)}
    n = len(basis)
    F = ring.field

    def to_vec(p: Polynomial) -> np.ndarray:
        v = F.zeros(n)
        for e, c in gb.normal_form(p).terms.items():
            v[index[e]] = c
        return v

    T = F.zeros((n, n, n))
    for i, a in enumerate(basis):
        for j in range(i, n):
            b = basis[j]
            v = to_vec(ring.monomial(tuple(x + y for x, y in zip(a, b))))
            T[i, j] = v
            T[j, i] = v
    A = FiniteLocalAlgebra(T, [ring.monomial_str(e) for e in basis], F, check=check)
    A.poly_ring = ring
    A.relations_gb = gb
    A._lift = to_vec
    A.monomials = basis
    return A


def _order_basis(ring, basis):
    # degree ascending, then decreasing in the monomial order: 1, x, y, z, x^2, ...
    by_deg: dict[int, list] = {}
    for e in basis:
        by_deg.setdefault(sum(e), []).append(e)
    out = []
    for d in sorted(by_deg):
        out.extend(sorted(by_deg[d], key=ring.key, reverse=True))
    return out


def algebra_from_text(variables: Sequence[str], relations: Sequence[str], field=GF101) -> FiniteLocalAlgebra:
    P = PolynomialRing(variables, field)
    return from_presentation(P, [P.parse(r) for r in relations])


class FGModule:
    """A finite-dimensional module over a :class:`FiniteLocalAlgebra`.

    ``actions[i]`` is the matrix of the basis element e_i of the algebra.
    ``free_rank`` is set when the module is A^b in block coordinates
    (coordinate ``t * dim A + j`` is e_j in copy t).
    """

    def __init__(self, algebra: FiniteLocalAlgebra, actions, free_rank: int | None = None, check: bool = True):
        F = algebra.field
        self.algebra = algebra
        self.field = F
        self.free_rank = free_rank
        if actions is None:
            # free module: actions are built only on demand
            if free_rank is None:
                raise AlgebraError("actions may be omitted only for free modules")
            self._actions = None
            self.dim = algebra.dim * free_rank
        else:
            acts = np.array(actions, dtype=F.dtype)
            if acts.ndim != 3 or acts.shape[0] != algebra.dim or acts.shape[1] != acts.shape[2]:
                raise AlgebraError("need one square action matrix per algebra basis element")
            self._actions = F.reduce(acts)
            self.dim = acts.shape[1]
        if check:
            self.verify()

    @property
    def actions(self) -> np.ndarray:
        if self._actions is None:
            A, b = self.algebra, self.free_rank
            n = A.dim
            L = np.stack([A.mult_matrix(A.basis_elt(i)) for i in range(n)])
            acts = A.field.zeros((n, n * b, n * b))
            for t in range(b):
                acts[:, t * n : (t + 1) * n, t * n : (t + 1) * n] = L
            self._actions = acts
        return self._actions

    def _images(self, V: np.ndarray, first: int = 0) -> np.ndarray:
        """imgs[i, k] = e_{first+i} * V[k] for the rows of V."""
        F = self.field
        V = np.asarray(V).reshape(-1, self.dim)
        if self._actions is None:
            A = self.algebra
            n, b = A.dim, self.free_rank
            W = V.reshape(V.shape[0], b, n)
            imgs = np.einsum("kta,iac->iktc", W, A.table[first:])
            return F.reduce(imgs).reshape(n - first, V.shape[0], self.dim)
        return F.reduce(np.einsum("iab,kb->ika", self._actions[first:], V))

    def verify(self):
        F, A = self.field, self.algebra
        if not np.array_equal(self.actions[0], F.eye(self.dim)):
            raise AlgebraError("unit does not act as the identity")
        lhs = F.reduce(np.einsum("iab,jbc->ijac", self.actions, self.actions))
        rhs = F.reduce(np.einsum("ijk,kac->ijac", A.table, self.actions))
        if not np.array_equal(lhs, rhs):
            raise AlgebraError("action does not respect the multiplication")

    # constructors ------------------------------------------------------------
    @classmethod
    def free(cls, A: FiniteLocalAlgebra, b: int) -> "FGModule":
        return cls(A, None, free_rank=b, check=False)

    @classmethod
    def zero(cls, A: FiniteLocalAlgebra) -> "FGModule":
        return cls(A, A.field.zeros((A.dim, 0, 0)), free_rank=0, check=False)

    @classmethod
    def residue_field(cls, A: FiniteLocalAlgebra) -> "FGModule":
        acts = A.field.zeros((A.dim, 1, 1))
        acts[0, 0, 0] = 1
        return cls(A, acts, check=False)

    @classmethod
    def cyclic(cls, A: FiniteLocalAlgebra, gens) -> "FGModule":
        """A / (gens)."""
        return A.ideal(gens).quotient_module()

    # basic operations ---------------------------------------------------------
    def act(self, a) -> np.ndarray:
        return self.field.reduce(np.einsum("i,ijk->jk", np.asarray(a), self.actions))

    def is_zero(self) -> bool:
        return self.dim == 0

    def _restrict(self, U: Subspace) -> np.ndarray:
        # action matrices in the coordinates of U's rref basis
        F = self.field
        if U.dim == 0:
            return F.zeros((self.algebra.dim, 0, 0))
        imgs = self._images(U.basis)
        return np.transpose(U.coords(imgs), (0, 2, 1)).copy()

    def is_submodule(self, U: Subspace) -> bool:
        if U.dim == 0:
            return True
        imgs = self._images(U.basis).reshape(-1, self.dim)
        return U.contains_space(span(imgs, self.dim, self.field))

    def submodule(self, U: Subspace) -> "FGModule":
        return FGModule(self.algebra, self._restrict(U), check=False)

    def quotient(self, U: Subspace) -> "FGModule":
        return self.subquotient(Subspace.full(self.dim, self.field), U)

    def subquotient(self, Z: Subspace, B: Subspace) -> "FGModule":
        """Z / B for submodules B <= Z, in coordinates of Z's complement to B."""
        F = self.field
        # basis of Z/B: rref of the rows of Z reduced mod B
        zb = B.reduce(Z.basis) if Z.dim else Z.basis
        Q = Subspace(zb, self.dim, F) if Z.dim else Z
        qb = Q.basis
        d = qb.shape[0]
        acts = F.zeros((self.algebra.dim, d, d))
        if d:
            imgs = B.reduce(self._images(qb))
            acts = np.transpose(Q.coords(imgs), (0, 2, 1)).copy()
        return FGModule(self.algebra, acts, check=False)

    def mM(self, U: Subspace | None = None) -> Subspace:
        """m * U (U defaults to the whole module)."""
        U = Subspace.full(self.dim, self.field) if U is None else U
        if U.dim == 0 or self.algebra.dim == 1:
            return Subspace.zero(self.dim, self.field)
        imgs = self._images(U.basis, first=1).reshape(-1, self.dim)
        return span(imgs, self.dim, self.field)

    def minimal_generators(self, U: Subspace | None = None) -> list[np.ndarray]:
        """Minimal generators of the submodule U: rref basis vectors not in mU + earlier picks."""
        U = Subspace.full(self.dim, self.field) if U is None else U
        if U.dim == 0:
            return []
        red = self.mM(U).reduce(U.basis)
        # greedy choice = pivot columns of the reduced vectors taken as columns
        _, piv, _ = rref(red.T.copy(), self.field)
        return [U.basis[j].copy() for j in piv]

    @cached_property
    def num_generators(self) -> int:
        return self.dim - self.mM().dim

    def is_cyclic(self) -> bool:
        return self.num_generators == 1

    def generated_submodule(self, vecs) -> Subspace:
        vecs = [np.asarray(v) for v in vecs]
        if not vecs:
            return Subspace.zero(self.dim, self.field)
        imgs = self._images(np.stack(vecs)).reshape(-1, self.dim)
        return span(imgs, self.dim, self.field)

    def annihilator(self) -> IdealSubspace:
        A = self.algebra
        if self.dim == 0:
            return A.unit_ideal()
        M = self.actions.reshape(A.dim, -1).T.copy()
        return IdealSubspace.of(A, kernel(M, self.field), check=False)

    def socle(self) -> Subspace:
        if self.dim == 0 or self.algebra.dim == 1:
            return Subspace.full(self.dim, self.field)
        stacked = np.concatenate(list(self.actions[1:]), axis=0)
        return kernel(stacked, self.field)

    def dual(self) -> "FGModule":
        """Matlis dual Hom_k(M, k) with the transposed action."""
        return FGModule(self.algebra, np.transpose(self.actions, (0, 2, 1)).copy(), check=False)

    def direct_sum(self, other: "FGModule") -> "FGModule":
        F = self.field
        if self.free_rank is not None and other.free_rank is not None:
            return FGModule.free(self.algebra, self.free_rank + other.free_rank)
        d = self.dim + other.dim
        acts = F.zeros((self.algebra.dim, d, d))
        acts[:, : self.dim, : self.dim] = self.actions
        acts[:, self.dim :, self.dim :] = other.actions
        fr = self.free_rank + other.free_rank if self.free_rank is not None and other.free_rank is not None else None
        return FGModule(self.algebra, acts, free_rank=fr, check=False)

    def power(self, b: int) -> "FGModule":
        """M^b in block coordinates."""
        F = self.field
        if self.free_rank is not None:
            return FGModule.free(self.algebra, self.free_rank * b)
        acts = F.zeros((self.algebra.dim, self.dim * b, self.dim * b))
        for t in range(b):
            acts[:, t * self.dim : (t + 1) * self.dim, t * self.dim : (t + 1) * self.dim] = self.actions
        return FGModule(self.algebra, acts, check=False)

    def is_equivariant(self, f: np.ndarray, target: "FGModule") -> bool:
        """Is the k-linear map f: self -> target A-linear?"""
        F = self.field
        lhs = F.reduce(np.einsum("iab,bc->iac", target.actions, f))
        rhs = F.reduce(np.einsum("ab,ibc->iac", f, self.actions))
        return np.array_equal(lhs, rhs)


class HomSpace:
    """Hom_A(M, N) as a subspace of k-matrices (row-major flattening).

    Exposed as an :class:`FGModule` via :meth:`module`, with (a.f)(m) = a f(m).
    When M is free with rank b the space is N^b: a map is given by the
    images of the generators.
    """

    def __init__(self, M: FGModule, N: FGModule):
        self.M, self.N = M, N
        F = M.field
        dM, dN = M.dim, N.dim
        self.free = M.free_rank is not None
        A = M.algebra
        if self.free:
            b = M.free_rank
            n = A.dim
            # f determined by f(e_0 in block t) = column block; matrix f = [N.act(.) applied]
            basis = []
            for t in range(b):
                for c in range(dN):
                    f = F.zeros((dN, dM))
                    v = F.zeros(dN)
                    v[c] = 1
                    # f(e_j in block t) = e_j * v
                    f[:, t * n : (t + 1) * n] = F.reduce(np.einsum("jab,b->aj", N.actions, v))
                    basis.append(f.reshape(-1))
            self.space = Subspace(np.array(basis, dtype=F.dtype).reshape(-1, dN * dM), dN * dM, F) if basis else Subspace.zero(dN * dM, F)
        else:
            # N.act(e_i) f - f M.act(e_i) = 0 for all i
            eqs = []
            for i in range(1, A.dim):
                # vec(Xf) = (X kron I) vec(f), vec(f Y) = (I kron Y^T) vec(f) (row-major)
                eqs.append(np.kron(N.actions[i], F.eye(dM)) - np.kron(F.eye(dN), M.actions[i].T))
            if eqs:
                eq = F.reduce(np.concatenate(eqs, axis=0))
                self.space = kernel(eq, F)
            else:
                self.space = Subspace.full(dN * dM, F)

    @property
    def dim(self) -> int:
        return self.space.dim

    def maps(self) -> list[np.ndarray]:
        return [b.reshape(self.N.dim, self.M.dim) for b in self.space.basis]

    def coords(self, f: np.ndarray) -> np.ndarray:
        return self.space.coords(np.asarray(f).reshape(-1))

    def module(self) -> FGModule:
        F = self.M.field
        A = self.M.algebra
        basis = self.space.basis
        d = basis.shape[0]
        acts = F.zeros((A.dim, d, d))
        if d:
            for i in range(A.dim):
                imgs = F.reduce(np.einsum("ab,kbc->kac", self.N.actions[i], basis.reshape(d, self.N.dim, self.M.dim)))
                acts[i] = self.space.coords(imgs.reshape(d, -1)).T
        return FGModule(A, acts, check=False)


def hom_matrix(src: HomSpace, dst: HomSpace, pre: np.ndarray | None = None, post: np.ndarray | None = None, F=GF101) -> np.ndarray:
    """Matrix (in Hom coordinates) of f -> post @ f @ pre."""
    cols = []
    for f in src.maps():
        g = f
        if post is not None:
            g = F.matmul(post, g)
        if pre is not None:
            g = F.matmul(g, pre)
        cols.append(dst.coords(g))
    if not cols:
        return F.zeros((dst.dim, 0))
    return np.stack(cols, axis=1)


# named operations -------------------------------------------------------------


def annihilator(A: FiniteLocalAlgebra, S) -> IdealSubspace:
    return A.annihilator(S)


def socle_and_gorenstein(A: FiniteLocalAlgebra) -> tuple[IdealSubspace, bool]:
    return A.socle, A.is_gorenstein()


def matlis_dual(M) -> FGModule:
    if isinstance(M, FiniteLocalAlgebra):
        M = M.regular_module()
    return M.dual()


def cyclic_iso_test(M, I: Subspace) -> bool:
    """M is isomorphic to A/I: M cyclic with annihilator I."""
    if isinstance(M, IdealSubspace):
        M = M.as_module()
    return M.is_cyclic() and M.annihilator() == I


def trivial_extension(A: FiniteLocalAlgebra, M: FGModule | None = None) -> FiniteLocalAlgebra:
    """A ⋉ M: basis of A followed by the basis of M, (a, m)(b, n) = (ab, an + mb)."""
    if M is None:
        M = A.regular_module()
    if M.algebra is not A:
        raise AlgebraError("module lives over a different algebra")
    n, d = A.dim, M.dim
    F = A.field
    T = F.zeros((n + d, n + d, n + d))
    T[:n, :n, :n] = A.table
    # e_i * m_s = (0, act(e_i) m_s)
    for i in range(n):
        T[i, n:, n:] = M.actions[i].T
        T[n:, i, n:] = M.actions[i].T
    labels = list(A.labels) + [f"m{s}" for s in range(d)]
    return FiniteLocalAlgebra(T, labels, F)


@dataclass(frozen=True)
class EZDResult:
    ok: bool
    reason: str
    partner: np.ndarray | None = None
    ann_dim: int = 0
    ann_generators: int = 0


def exact_zero_divisor(A: FiniteLocalAlgebra, x) -> EZDResult:
    """Is x an exact zero divisor?  Returns the partner y when it is."""
    x = A.element(x)
    if A.is_unit(x):
        return EZDResult(False, "unit")
    if A.is_zero(x):
        return EZDResult(False, "zero element", ann_dim=A.dim)
    ann = A.annihilator(x)
    if ann.dim == 0:
        return EZDResult(False, "regular")  # cannot happen for a nonzero nonunit
    gens = ann.generators()
    if len(gens) != 1:
        return EZDResult(False, "annihilator not cyclic", ann_dim=ann.dim, ann_generators=len(gens))
    y = gens[0]
    if A.annihilator(y) != A.ideal([x]):
        return EZDResult(False, "double-annihilator mismatch", ann_dim=ann.dim, ann_generators=1)
    return EZDResult(True, "exact zero divisor", partner=y, ann_dim=ann.dim, ann_generators=1)


__all__ = [
    "AlgebraError",
    "EZDResult",
    "FGModule",
    "FiniteLocalAlgebra",
    "HomSpace",
    "IdealSubspace",
    "annihilator",
    "cyclic_iso_test",
    "exact_zero_divisor",
    "from_presentation",
    "matlis_dual",
    "socle_and_gorenstein",
    "trivial_extension",
]
