import pytest

from quiverphi.algebra import simple
from quiverphi.errors import AlgebraMismatch, NotBound, ShapeMismatch, UnknownVertex
from quiverphi.repmod import (direct_sum, hom_space, identity_morphism, is_projective, loewy_length, make_representation,
                              quotient, radical, radical_layers, socle, support, top)


def test_shapes_are_checked(a2):
    with pytest.raises(ShapeMismatch):
        make_representation(a2, {"1": 1, "2": 1}, {"a": [[1, 0]]})
    with pytest.raises(UnknownVertex):
        make_representation(a2, {"9": 1}, {})


def test_missing_maps_default_to_zero(a2):
    M = make_representation(a2, {"1": 1, "2": 1}, {})
    assert M.maps["a"].is_zero()
    assert support(M) == ["1", "2"]


def test_relations_are_enforced(dual_numbers):
    with pytest.raises(NotBound):
        make_representation(dual_numbers, {"1": 1}, {"x": [[1]]})
    M = make_representation(dual_numbers, {"1": 2}, {"x": [[0, 0], [1, 0]]})
    assert loewy_length(M) == 2


def test_radical_top_socle(a2):
    P1 = a2.projective("1")
    assert radical(P1).rep.dimension_vector == (0, 1)
    assert top(P1).dimension_vector == (1, 0)
    assert socle(P1).rep.dimension_vector == (0, 1)
    assert radical_layers(P1) == [{"1": 1, "2": 1}, {"1": 0, "2": 1}]


def test_quotient_by_radical(a2):
    P1 = a2.projective("1")
    Q = quotient(P1, radical(P1)).rep
    assert Q.dimension_vector == (1, 0)
    assert not is_projective(Q)
    assert is_projective(P1)


def test_direct_sum(a2):
    S = direct_sum(simple(a2, "1"), a2.projective("1"))
    assert S.dimension_vector == (2, 1)
    assert S.maps["a"].shape == (1, 2)


def test_direct_sum_needs_one_algebra(a2, dual_numbers):
    with pytest.raises(AlgebraMismatch):
        direct_sum(simple(a2, "1"), simple(dual_numbers, "1"))


def test_hom_spaces(a2):
    P1, S1, S2 = a2.projective("1"), simple(a2, "1"), simple(a2, "2")
    assert hom_space(P1, S1).dim == 1
    assert hom_space(S2, P1).dim == 1
    assert hom_space(S1, P1).dim == 0
    assert hom_space(P1, S2).dim == 0
    for f in hom_space(S2, P1):
        assert f.commutes()


def test_identity_morphism(a2):
    P1 = a2.projective("1")
    f = identity_morphism(P1)
    assert f.is_iso()
    assert f.compose(f).components == f.components
    assert f.kernel().rep.is_zero()
    assert f.image().rep.dimension_vector == P1.dimension_vector
