import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgkit.artin import (
    AlgebraError,
    FGModule,
    FiniteLocalAlgebra,
    HomSpace,
    algebra_from_text,
    cyclic_iso_test,
    exact_zero_divisor,
    from_presentation,
    matlis_dual,
    trivial_extension,
)
from qgkit.corpus import ARTINIAN_RINGS, artinian_ring
from qgkit.graded import NotArtinianError
from qgkit.poly import PolynomialRing


def test_dim8_structure(dim8):
    assert dim8.dim == 8
    assert dim8.labels == ["1", "x", "y", "z", "x*y", "x*z", "y*z", "x*y*z"]
    assert dim8.socle.dim == 1 and dim8.is_gorenstein()
    assert dim8.embedding_dimension() == 3 and dim8.loewy_length() == 4
    assert dim8.annihilator(dim8.element("x")).dim == 4


def test_element_arithmetic(dim8):
    y = dim8.element("y")
    # y^2 = -xz and y^3 = -xyz
    assert dim8.elt_str(dim8.mul(y, y)) == "-x*z"
    assert dim8.elt_str(dim8.mul(y, dim8.mul(y, y))) == "-x*y*z"
    assert dim8.is_unit(dim8.element("1 + x")) and not dim8.is_unit(y)


def test_exact_zero_divisors(dim8):
    for v in ("x", "z"):
        r = exact_zero_divisor(dim8, v)
        assert r.ok and dim8.elt_str(r.partner) == v
    for v in ("y", "x + y"):
        r = exact_zero_divisor(dim8, v)
        assert not r.ok and r.reason == "annihilator not cyclic"
    assert exact_zero_divisor(dim8, "1").reason == "unit"
    assert exact_zero_divisor(dim8, "0").reason == "zero element"


def test_square_zero_ring(square_zero):
    assert square_zero.dim == 3 and square_zero.socle.dim == 2
    assert not square_zero.is_gorenstein()


def test_trivial_extensions(square_zero):
    E = trivial_extension(square_zero, matlis_dual(square_zero))
    assert E.dim == 6 and E.is_gorenstein()
    E2 = trivial_extension(square_zero)
    assert E2.dim == 6 and not E2.is_gorenstein()


def test_quotients(dim8):
    Q, proj = dim8.quotient_by(["x"])
    assert Q.dim == 4 and Q.is_gorenstein()
    assert Q.is_zero(Q.mul(Q.element("y"), Q.element("y")))
    assert proj.shape == (4, 8)


def test_inhomogeneous_presentation():
    P = PolynomialRing("xy")
    A = from_presentation(P, [P.parse("x^2 - y^3"), P.parse("x*y")])
    assert A.dim == 5 and A.is_gorenstein()
    with pytest.raises(NotArtinianError):
        from_presentation(PolynomialRing("x"), [PolynomialRing("x").parse("x - x^2")])


def test_table_verification():
    T = np.zeros((2, 2, 2), dtype=np.int64)
    T[0, 0, 0] = T[0, 1, 1] = T[1, 0, 1] = 1
    assert FiniteLocalAlgebra(T).dim == 2  # k[t]/(t^2)
    T[1, 1, 0] = 1  # t^2 = 1: not local
    with pytest.raises(AlgebraError):
        FiniteLocalAlgebra(T)
    T[1, 1, 0] = 0
    T[1, 0, 1] = 0  # t * 1 = 0 but 1 * t = t
    with pytest.raises(AlgebraError):
        FiniteLocalAlgebra(T)


def test_hom_spaces(dim8):
    k = FGModule.residue_field(dim8)
    A = dim8.regular_module()
    assert HomSpace(k, A).dim == 1  # the socle
    assert HomSpace(A, k).dim == 1
    assert HomSpace(FGModule.free(dim8, 2), k).dim == 2


def test_cyclic_iso_test(dim8):
    ann = dim8.annihilator(dim8.element("x"))
    assert cyclic_iso_test(ann, dim8.ideal(["x"]))
    assert not cyclic_iso_test(dim8.annihilator(dim8.element("y")), dim8.ideal(["y"]))


def test_algebra_from_text():
    A = algebra_from_text(["t"], ["t^3"])
    assert A.dim == 3 and A.is_gorenstein()


ring_names = st.sampled_from(sorted(ARTINIAN_RINGS))


def _vec(A, data):
    v = np.array(data[: A.dim] + [0] * max(0, A.dim - len(data)), dtype=np.int64) % 101
    v[0] = 0
    return v


coeffs = st.lists(st.integers(0, 100), min_size=8, max_size=8)


@given(ring_names, coeffs, coeffs)
def test_annihilator_lattice_laws(name, a, b):
    A = artinian_ring(name)
    I = A.ideal([_vec(A, a)])
    J = A.ideal([_vec(A, b)])
    assert A.annihilator(I + J) == A.annihilator(I).intersect(A.annihilator(J))
    assert A.annihilator(A.annihilator(I)).contains_space(I)
    assert A.annihilator(A.annihilator(A.annihilator(I))) == A.annihilator(I)
    if A.is_gorenstein():
        # double annihilator property of Gorenstein artinian rings
        assert A.annihilator(A.annihilator(I)) == I
        assert A.annihilator(I).dim + I.dim == A.dim


@given(ring_names, coeffs)
def test_matlis_involution(name, a):
    A = artinian_ring(name)
    M = FGModule.cyclic(A, [_vec(A, a)])
    D = matlis_dual(M)
    assert D.dim == M.dim
    assert np.array_equal(matlis_dual(D).actions, M.actions)
    assert D.socle().dim == M.num_generators


@given(ring_names, coeffs, coeffs)
def test_multiplication_is_associative_and_commutative(name, a, b):
    A = artinian_ring(name)
    u, v = _vec(A, a), _vec(A, b)
    assert np.array_equal(A.mul(u, v), A.mul(v, u))
    w = A.mul(u, u)
    assert np.array_equal(A.mul(A.mul(u, v), w), A.mul(u, A.mul(v, w)))
