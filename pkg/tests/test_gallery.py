import random
from fractions import Fraction

import pytest

from quiverphi.algebra import simple
from quiverphi.decomp import is_isomorphic
from quiverphi.errors import DegenerateParameters
from quiverphi.gallery import (build_cpq, cpq_arm_quotient, cpq_family, cpq_sample, cpq_standard_suite, jordan,
                               random_module, verify_cpq_claims, verify_cpq_syzygy_table)
from quiverphi.homology import Finite, inj_dim, syzygy
from quiverphi.igusa import default_suite, phi_lower_bound, phi_report
from quiverphi.linalg import FieldSpec
from quiverphi.morita import EXTENDED
from quiverphi.registry import IsoRegistry
from quiverphi.repmod import check_bound, direct_sum


@pytest.mark.parametrize("m,p,q", [(0, 2, 3), (2, 1, 3), (2, 2, 0), (2, 0, 3), (2, 2, 1)])
def test_degenerate_parameters(m, p, q):
    with pytest.raises(DegenerateParameters):
        build_cpq(m, p, q)


def test_cpq_shape(cpq):
    C = cpq.algebra
    assert cpq.mode == EXTENDED
    assert cpq.connector_labels == ("ga1",)
    assert [b.name for b in cpq.blocks] == ["chain", "Bpq"]
    assert cpq.A.vertices == ("c3", "c2", "c1")
    assert len(cpq.B.quiver.arrows) == 16
    assert C.params["m"] == 2
    assert len(cpq.extra_relations) == 2


def test_family_names(cpq):
    assert cpq_family(cpq, "M", 1, 2, 0).name == "M(2,0,1)"
    assert cpq_family(cpq, "M0", 1, lam=1, mu=3).name == "M0(1,3,1)"
    assert cpq_family(cpq, "Nn", 2, 3).name == "Nn(3,2)"
    assert cpq_family(cpq, "N0bar", 1).name == "N0bar(1)"


def test_family_arguments_are_checked(cpq):
    with pytest.raises(ValueError):
        cpq_family(cpq, "Z", 1)
    with pytest.raises(ValueError):
        cpq_family(cpq, "M", 1, 4)
    with pytest.raises(ValueError):
        cpq_family(cpq, "M", -1, 1)


def test_syzygy_of_the_chain_end(cpq):
    C = cpq.algebra
    assert is_isomorphic(syzygy(simple(C, "c1")), cpq_family(cpq, "M0", 1, lam=1, mu=3))


def test_syzygy_moves_along_the_cycle(cpq):
    M = cpq_family(cpq, "M", 1, 1, 2)
    assert is_isomorphic(syzygy(M), cpq_family(cpq, "M", 1, 2, -2))
    assert not is_isomorphic(syzygy(M), cpq_family(cpq, "M", 1, 2, 2))


def test_degenerate_members_are_simple(cpq):
    C = cpq.algebra
    assert is_isomorphic(cpq_family(cpq, "Mn", 0, 1), simple(C, "a2"))
    assert is_isomorphic(cpq_family(cpq, "N0n", 0), direct_sum(simple(C, "a1"), simple(C, "b1")))


def test_sample_and_suite(cpq):
    sample = cpq_sample(cpq, lambdas=(0, 1), n_max=1)
    assert sample
    assert all(not X.is_zero() for X in sample)
    for X in sample:
        check_bound(X)
    suite = cpq_standard_suite(cpq, lambdas=(0, 1), n_max=1, depth=2)
    names = [X.name for X in suite]
    assert "Omega^0Sc1" in names
    assert "Sc0" in names
    assert {"Pc0/a", "Pc0/b"} <= set(names)


def test_primed_family_is_a_reciprocal_jordan_family(cpq):
    assert is_isomorphic(cpq_family(cpq, "Mp", 1, 1, 2), cpq_family(cpq, "M", 1, 1, Fraction(1, 2)))
    assert is_isomorphic(cpq_family(cpq, "Np", 2, 1, 2), cpq_family(cpq, "N", 2, 1, Fraction(1, 2)))
    assert not is_isomorphic(syzygy(cpq_family(cpq, "Mp", 1, 1, 2)), cpq_family(cpq, "M", 1, 1, Fraction(1, 2)))


def test_small_syzygy_table_passes(cpq):
    report = verify_cpq_syzygy_table(cpq, lambdas=(2,), n_max=1)
    assert report.status == "pass", report.witnesses
    assert "Mp(1,2,1) = M(1,1/2,1): pass" in report.details


def test_arm_quotients_have_the_arms_as_syzygies(cpq):
    assert is_isomorphic(syzygy(cpq_arm_quotient(cpq, "a")), cpq_family(cpq, "Mbar", 1, 1))
    assert is_isomorphic(syzygy(cpq_arm_quotient(cpq, "b")), cpq_family(cpq, "Nbar", 1, 1))
    with pytest.raises(ValueError):
        cpq_arm_quotient(cpq, "c")


def test_arm_quotients_reach_phi_five(cpq):
    M = direct_sum(cpq_arm_quotient(cpq, "a"), cpq_arm_quotient(cpq, "b"))
    r = phi_report(M, IsoRegistry(cpq.algebra), horizon=6)
    assert r.value == 5
    assert r.ranks == (2, 2, 2, 2, 2, 1, 1)
    assert not r.certified


def test_injective_dimension_of_the_chain_end(cpq):
    assert inj_dim(simple(cpq.algebra, "c1")) == Finite(2)


@pytest.mark.slow
@pytest.mark.parametrize("m", [3, 4])
def test_injective_dimension_grows_with_the_chain(m):
    g = build_cpq(m, 2, 3)
    assert inj_dim(simple(g.algebra, "c1")) == Finite(m)


def test_jordan_block():
    f = FieldSpec()
    assert jordan(2, 5, f).to_rows() == [[5, 1], [0, 5]]


def test_random_module_is_bound(a3_rad):
    rng = random.Random(7)
    for _ in range(5):
        check_bound(random_module(a3_rad, rng))


@pytest.mark.slow
def test_syzygy_table(cpq):
    report = verify_cpq_syzygy_table(cpq)
    assert report.status == "pass", report.witnesses


@pytest.mark.slow
def test_cpq_claims(cpq):
    report = verify_cpq_claims(cpq)
    assert report.status == "pass", report.witnesses
    assert any("phi(standard suite) = 5" in d for d in report.details)
    assert any("kernel index 5" in d for d in report.details)
    assert any("class closure not finite within 6 rounds" in d for d in report.details[:1])


@pytest.mark.slow
def test_opposite_phi_grows_with_the_chain():
    g = build_cpq(8, 2, 3)
    op = g.algebra.opposite()
    registry = IsoRegistry(op)
    assert phi_report(simple(op, "c1"), registry, horizon=10).value == 8
    assert phi_lower_bound(default_suite(op), registry, horizon=8).value >= 7
