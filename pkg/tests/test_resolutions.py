import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgkit.artin import FGModule, exact_zero_divisor
from qgkit.corpus import ARTINIAN_RINGS, artinian_ring, random_sequence
from qgkit.criteria import cyclic_quotient
from qgkit.graded import GradedModule
from qgkit.resolutions import (
    Certification,
    ResolutionTooShort,
    bass_prefix,
    detect_periodicity,
    ext_module,
    ext_profile,
    gdim_estimate,
    poincare_prefix,
    resolve_minimal,
    residue_field,
    tor_module,
    totally_reflexive_test,
)


def test_residue_field_over_square_zero_ring_doubles(square_zero):
    # m^2 = 0 with embedding dimension 2: each syzygy is k^2 times the previous one
    res = resolve_minimal(residue_field(square_zero), 5)
    assert res.betti[:5] == [1, 2, 4, 8, 16]
    assert res.is_minimal() and res.is_exact()


def test_exact_zero_divisor_quotient_is_periodic(dim8):
    M = cyclic_quotient(dim8, ["x"])
    res = resolve_minimal(M, 6)
    assert res.betti == [1] * 7
    cert = detect_periodicity(res)
    assert cert is not None and cert.kind == "periodic" and cert.period <= 2
    k = residue_field(dim8)
    assert [tor_module(res, k, i).dim for i in range(6)] == [1] * 6
    rep = totally_reflexive_test(M)
    assert rep.status == Certification.YES and rep.reflexive
    g = gdim_estimate(M)
    assert g.value == 0 and g.status == "certified"


def test_residue_field_not_totally_reflexive_over_non_gorenstein(square_zero):
    rep = totally_reflexive_test(residue_field(square_zero))
    assert rep.status == Certification.NO


def test_free_module_totally_reflexive(square_zero):
    rep = totally_reflexive_test(FGModule.free(square_zero, 2))
    assert rep.status == Certification.YES and rep.reason == "free module"


def test_resolution_too_short(dim8):
    res = resolve_minimal(cyclic_quotient(dim8, ["y"]), 1)
    with pytest.raises(ResolutionTooShort):
        ext_module(res, dim8.regular_module(), 5)


def test_graded_resolution_over_polynomial_ring(poly2):
    k = residue_field(poly2)
    res = resolve_minimal(k, 5)
    assert res.terminated and res.betti == [1, 2, 1]
    assert res.shifts == [[0], [1, 1], [2]]
    # Ext^i(k, S) is concentrated in degree 2
    assert [not ext_module(res, GradedModule.free(poly2, 1), i).is_zero() for i in range(4)] == [False, False, True, False]


def test_graded_resolution_over_node_is_periodic(node):
    M = GradedModule.cyclic(node, [node.element("x")])
    res = resolve_minimal(M, 5)
    assert res.betti == [1] * 6
    cert = detect_periodicity(res)
    assert cert is not None and cert.period in (1, 2)
    prof = ext_profile(M, GradedModule.free(node, 1), 6, res)
    assert prof.nonzero_degrees() == [0] and prof.tail_certified_zero(1)


def test_series_prefixes(dim8, square_zero):
    p = poincare_prefix(residue_field(dim8), 6)
    # dim8 is a Koszul algebra with Hilbert series (1+t)^3: Poincare series 1/(1-t)^3
    assert p.coefficients == (1, 3, 6, 10, 15, 21, 28)
    b = bass_prefix(square_zero.regular_module(), 5)
    assert b.coefficients == (2, 3, 6, 12, 24, 48)
    assert poincare_prefix(cyclic_quotient(dim8, ["x"]), 4).certified_complete


ring_names = st.sampled_from(sorted(ARTINIAN_RINGS))


@given(ring_names, st.integers(0, 2**32 - 1))
def test_resolution_invariants(name, seed):
    A = artinian_ring(name)
    seq = random_sequence(A, np.random.default_rng(seed), 1)
    M = cyclic_quotient(A, seq)
    res = resolve_minimal(M, 3)
    assert res.is_minimal() and res.is_exact()
    # Tor_i(M, k) has dimension b_i for a minimal resolution
    k = residue_field(A)
    assert [tor_module(res, k, i).dim for i in range(3)] == res.betti[:3]


@given(ring_names, st.integers(0, 2**32 - 1))
def test_exact_zero_divisors_give_period_one(name, seed):
    A = artinian_ring(name)
    x = random_sequence(A, np.random.default_rng(seed), 1)
    if not x or not exact_zero_divisor(A, x[0]).ok:
        return
    res = resolve_minimal(cyclic_quotient(A, x), 3)
    assert res.betti == [1, 1, 1, 1]
    cert = detect_periodicity(res)
    assert cert is not None and cert.period <= 2
