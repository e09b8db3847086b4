import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgkit.groebner import (
    buchberger,
    colon,
    determinant,
    is_alternating,
    monomial_krull_dim,
    pfaffian,
    pfaffian_ideal,
    syzygies,
    vec_from_polys,
    vec_to_polys,
)
from qgkit.linalg import QQ
from qgkit.poly import ParseError, PolynomialRing

P = PolynomialRing("xyz")
x, y, z = P.gens()


def test_parse_and_print():
    f = P.parse("x^2*y + 3*z - 2*(x - y)^2")
    assert f == x**2 * y + 3 * z - 2 * (x - y) ** 2
    assert str(P.parse("y^2+x*z")) == "y^2 + x*z"
    assert P.parse("-1").constant_term() == 100


def test_parse_error_column():
    with pytest.raises(ParseError) as err:
        P.parse("x^2 + * y")
    assert err.value.column == 7
    with pytest.raises(ParseError):
        P.parse("w + x")


def test_grevlex_order():
    f = P.parse("x*z^2 + y^2*z + x^3")
    assert f.leading_exp() == (3, 0, 0)
    g = P.parse("x*z^2 + y^2*z")
    assert g.leading_exp() == (0, 2, 1)


def test_groebner_basis_of_dim8_ring():
    # sympy (grevlex, modulus 101): [x**2, x*z + y**2, z**2]
    G = buchberger([x**2, y**2 + x * z, z**2], P)
    assert sorted(str(g) for g in G.generators) == sorted(["x^2", "y^2 + x*z", "z^2"])
    assert str(G.normal_form(y**3)) == "-x*y*z"
    # y*(y^2 + x*z) lies in the ideal, so its normal form vanishes
    assert G.normal_form(y * (y**2 + x * z)).is_zero()


def test_groebner_normal_forms_against_sympy():
    G = buchberger([P.parse("x^2 - y*z"), P.parse("x*y - z^2"), P.parse("y^3 + x*z")], P)
    assert len(G.generators) == 6
    assert str(G.normal_form(x**5)) == "x*z^2"
    assert G.normal_form(P.parse("x^3*y^2 + z^5")) == P.parse("-y*z^3 + y*z^2")
    assert G.normal_form(P.parse("x*y*z^3 - 7*y^4")) == P.parse("y*z^2 + 7*z^3")


def test_groebner_over_rationals():
    Q = PolynomialRing("xy", QQ)
    G = buchberger([Q.parse("x^2 + 2*x*y^2"), Q.parse("x*y + 2*y^3 - 1")], Q)
    assert G.contains(Q.parse("x"))


def test_colon_and_syzygies():
    G = buchberger([x * y, x * z], P)
    assert colon(G, y) == buchberger([x], P)
    assert colon(G, x) == buchberger([y, z], P)
    S = syzygies([vec_from_polys([x**2]), vec_from_polys([x * y])], 1, P)
    assert len(S) == 1
    a, b = (vec_to_polys({(c, e): v for (c, e), v in S[0].items() if c == k}, 2, P)[k] for k in range(2))
    assert (a * x**2 + b * x * y).is_zero()


def test_krull_dimension_of_monomial_ideals():
    assert monomial_krull_dim(3, [(1, 1, 0), (1, 0, 1)]) == 2
    assert monomial_krull_dim(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2)]) == 0
    assert monomial_krull_dim(2, []) == 2


def test_pfaffians():
    m = [[P.zero(), x, y], [-x, P.zero(), z], [-y, -z, P.zero()]]
    assert is_alternating(m)
    assert sorted(str(g) for g in pfaffian_ideal(m)) == ["-y", "x", "z"]
    a = [[P.zero(), x, y, z], [-x, P.zero(), z, y], [-y, -z, P.zero(), x], [-z, -y, -x, P.zero()]]
    pf = pfaffian(a)
    assert pf * pf == determinant(a)


polys = st.lists(
    st.tuples(st.integers(0, 100), st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))), min_size=1, max_size=4
).map(lambda ts: sum((P.monomial(e) * P.const(c) for c, e in ts), P.zero()))


@given(st.lists(polys, min_size=1, max_size=3), polys)
def test_normal_form_properties(gens, f):
    G = buchberger(gens, P)
    for g in gens:
        assert G.normal_form(g).is_zero()
    r = G.normal_form(f)
    assert G.normal_form(r) == r
    assert G.contains(f - r)


@given(polys, polys)
def test_polynomial_ring_axioms(f, g):
    assert f * g == g * f
    assert (f + g) * f == f * f + g * f
    assert (f - f).is_zero()
