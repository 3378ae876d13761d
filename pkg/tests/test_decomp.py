from fractions import Fraction

import pytest

from quiverphi.algebra import simple
from quiverphi.decomp import (decompose, endomorphism_certificate, is_indecomposable, is_isomorphic, minimal_polynomial,
                              multiplicities)
from quiverphi.errors import AlgebraMismatch
from quiverphi.gallery import jordan
from quiverphi.linalg import FieldSpec, Matrix
from quiverphi.registry import IsoRegistry
from quiverphi.repmod import direct_sum, direct_sum_all, identity_morphism, make_representation


def kronecker_module(k, lam, n=1):
    f = k.field
    return make_representation(k, {"1": n, "2": n}, {"a": Matrix.identity(n, f), "b": jordan(n, lam, f)})


def test_split_sum_of_projective_and_simple(a2):
    M = direct_sum(a2.projective("1"), simple(a2, "2"))
    parts = decompose(M)
    assert sorted(X.dimension_vector for X in parts) == [(0, 1), (1, 1)]


def test_projectives_are_indecomposable(a3_rad):
    for v in a3_rad.vertices:
        assert is_indecomposable(a3_rad.projective(v))


def test_kronecker_family_members_are_distinct(kronecker):
    assert not is_isomorphic(kronecker_module(kronecker, 1), kronecker_module(kronecker, 2))
    scaled = make_representation(kronecker, {"1": 1, "2": 1}, {"a": [[2]], "b": [[4]]})
    assert is_isomorphic(scaled, kronecker_module(kronecker, 2))


def test_jordan_block_is_indecomposable(kronecker):
    M = kronecker_module(kronecker, 0, n=2)
    assert decompose(M) == [M]
    cert = endomorphism_certificate(M)
    assert cert.end_dim == 2
    assert cert.residue_degree == 1


def test_diagonal_splits(kronecker):
    f = kronecker.field
    M = make_representation(kronecker, {"1": 2, "2": 2},
                            {"a": Matrix.identity(2, f), "b": Matrix.from_rows([[1, 0], [0, 2]], f)})
    parts = decompose(M)
    assert len(parts) == 2
    assert any(is_isomorphic(X, kronecker_module(kronecker, 2)) for X in parts)


def test_splitting_over_a_prime_field():
    from quiverphi.algebra import from_presentation
    from quiverphi.quiver import build_quiver

    gf5 = FieldSpec(5)
    k = from_presentation(build_quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")]), [], gf5)
    M = make_representation(k, {"1": 2, "2": 2}, {"a": Matrix.identity(2, gf5), "b": Matrix.from_rows([[1, 0], [0, 6]], gf5)})
    # 6 = 1 in GF(5): two copies of the same module
    parts = decompose(M)
    assert len(parts) == 2
    assert is_isomorphic(parts[0], parts[1])


def test_minimal_polynomial(kronecker):
    M = kronecker_module(kronecker, 0, n=2)
    f = identity_morphism(M).scale(3)
    assert minimal_polynomial(f) == [Fraction(-3), Fraction(1)]


def test_isomorphism_of_sums_is_order_free(a2):
    S1, S2, P1 = simple(a2, "1"), simple(a2, "2"), a2.projective("1")
    assert is_isomorphic(direct_sum_all(a2, [S1, P1, S2]), direct_sum_all(a2, [S2, S1, P1]))
    assert not is_isomorphic(direct_sum(S1, S2), P1)


def test_multiplicities(a2):
    S1, S2 = simple(a2, "1"), simple(a2, "2")
    counts = multiplicities(direct_sum_all(a2, [S1, S2, S1]), IsoRegistry(a2))
    assert sorted(counts.values()) == [1, 2]


def test_cross_algebra_comparison_rejected(a2, dual_numbers):
    with pytest.raises(AlgebraMismatch):
        is_isomorphic(simple(a2, "1"), simple(dual_numbers, "1"))
