import random

import pytest

from quiverphi.algebra import from_presentation, radical_projective, simple
from quiverphi.errors import GlueError, NoGluing
from quiverphi.gallery import build_bm1_example, random_module, verify_bm1
from quiverphi.homology import syzygy
from quiverphi.igusa import default_suite
from quiverphi.linalg import FieldSpec
from quiverphi.morita import (EQUALITY, EXTENDED, OPPOSITE, PARTITION, GlueSpec, block_parts, check_hypotheses,
                              check_corollary_3_4, glue, glue_from_partition, lift, structural_hypotheses,
                              verify_claim_2, verify_lemma_3_1, verify_one_sided_syzygy, verify_prop_3_5_upper,
                              verify_prop_3_8, verify_remark_3_6, verify_thm_3_3_bound, verify_thm_3_7)
from quiverphi.quiver import build_quiver
from quiverphi.registry import IsoRegistry

Q = FieldSpec()


def line(name, *verts):
    arrows = [(f"{name.lower()}{i}", verts[i], verts[i + 1]) for i in range(len(verts) - 1)]
    return from_presentation(build_quiver(list(verts), arrows), [], Q, name=name)


def test_fix5_shape(fix5):
    C = fix5.algebra
    assert C.dim == 8
    assert fix5.connector_classes == 2
    assert fix5.connector_labels == ("al", "be")
    assert fix5.mode == EQUALITY
    assert fix5.block("A") is fix5.A
    assert fix5.side_of("3") == 1
    with pytest.raises(NoGluing):
        fix5.block("Z")


def test_fix5_hypotheses(fix5):
    report = check_hypotheses(fix5)
    assert (report.h1, report.h2, report.h3, report.h4) == (True, True, True, "holds")
    assert report.as_check().status == "pass"


def test_fix5_lemma(fix5):
    C = fix5.algebra
    report = verify_lemma_3_1(fix5, [simple(C, v).named(f"S{v}") for v in C.vertices])
    assert report.status == "pass"
    parts, mixed = block_parts(fix5, syzygy(simple(C, "1")))
    assert not mixed
    assert [len(parts[0]), len(parts[1])] == [1, 1]


def test_fix5_lemma_on_radicals_and_random_modules(fix5):
    C = fix5.algebra
    modules = [simple(C, v).named(f"S{v}") for v in C.vertices]
    radicals = [radical_projective(C, v).named(f"radP{v}") for v in C.vertices]
    modules += [X for X in radicals if not X.is_zero()]
    rng = random.Random(20)
    modules += [random_module(C, rng).named(f"R{i}") for i in range(20)]
    report = verify_lemma_3_1(fix5, modules)
    assert report.status == "pass", report.witnesses
    assert len(report.details) == len(modules)
    assert "S1: summands per block A:1, B:1" in report.details
    assert "radP1: summands per block A:0, B:0" in report.details


def test_fix5_thm_3_7(fix5):
    report = verify_thm_3_7(fix5, default_suite(fix5.algebra))
    assert report.status == "pass"
    assert report.details[:3] == ["block findim (suite) 1", "findim over O 0", "bound 2"]


def test_fix5_thm_3_3(fix5):
    C = fix5.algebra
    report = verify_thm_3_3_bound(fix5, default_suite(C), IsoRegistry(C))
    assert report.status == "pass"
    assert report.details == ["eta(O) = 0 over 0 orbit modules", "block phidims [1, 1]", "bound 2"]


def test_fix5_corollary_3_4(fix5):
    report = check_corollary_3_4(fix5)
    assert report.status == "pass"
    assert report.details == ["S1: pd over B of the off-block part = 0",
                              "S3: pd over A of the off-block part = 0"]


def test_fix5_prop_3_8(fix5):
    report = verify_prop_3_8(fix5)
    assert report.status == "pass"
    assert report.details == ["bound 2"]
    assert not report.witnesses


def test_fix5_remark_3_6(fix5):
    report = verify_remark_3_6(fix5)
    assert report.status == "pass"
    assert report.details == ["A: finite with 1 classes", "B: finite with 1 classes", "FIX5: finite with 2 classes"]


def test_fix5_claim_2(fix5):
    # every syzygy over the opposite is semisimple, so no connector map is examined
    report = verify_claim_2(fix5)
    assert report.status == "pass"
    assert report.details == ["0 connector maps checked"]


def test_fix5_phi_bound(fix5):
    C = fix5.algebra
    report = verify_prop_3_5_upper(fix5, default_suite(C), IsoRegistry(C))
    assert report.status == "pass"
    assert "bound 6" in report.details


def test_one_sided_syzygy(fix5):
    S3 = simple(fix5.algebra, "3").named("S3")
    assert verify_one_sided_syzygy(fix5, S3).status == "pass"


def test_equality_gluing_dimension():
    A, B = line("A", "1", "2"), line("B", "3", "4")
    g = glue(GlueSpec(A, B, forward=(("al", "2", "3"),), name="C"))
    # a*al vanishes, al*b survives
    assert g.algebra.dim == 8
    assert g.connector_classes == 2
    assert g.algebra.is_zero(g.algebra.quiver.path(["a0", "al"]))
    assert not g.algebra.is_zero(g.algebra.quiver.path(["al", "b0"]))


def test_gluing_errors():
    A, B = line("A", "1", "2"), line("B", "3", "4")
    with pytest.raises(GlueError):
        glue(GlueSpec(A, B, forward=(("x", "1", "2"),)))
    with pytest.raises(GlueError):
        glue(GlueSpec(A, line("B", "2", "5"), forward=(("x", "1", "5"),)))
    with pytest.raises(GlueError):
        glue(GlueSpec(A, B, forward=(("al", "2", "3"),), extra_relations=(((1, "a0*al"),),)))
    with pytest.raises(GlueError):
        glue(GlueSpec(A, B, forward=(("a0", "2", "3"),)))
    with pytest.raises(GlueError):
        glue(GlueSpec(A, B, forward=(("al", "2", "3"),), mode="sideways"))


def test_extended_gluing_keeps_extra_relations():
    A, B = line("A", "1", "2"), line("B", "3", "4")
    g = glue(GlueSpec(A, B, forward=(("al", "2", "3"),), mode=EXTENDED,
                      extra_relations=(((1, "al*b0"),),)))
    assert g.algebra.dim == 7
    assert len(g.extra_relations) == 1
    # the extra relation lies outside the equality presentation
    assert verify_prop_3_5_upper(g, [], IsoRegistry(g.algebra)).status == "unknown"


def test_opposite_gluing(fix5):
    op = fix5.opposite()
    assert op.mode == OPPOSITE
    assert op.algebra is fix5.algebra.opposite()
    assert op.algebra.quiver.arrow("al").source == "4"
    assert op.opposite() is fix5
    assert all(structural_hypotheses(op)[0].values())


def test_lift_needs_a_block_module(fix5, a2):
    X = lift(fix5, simple(fix5.A, "1"))
    assert X.algebra is fix5.algebra
    assert X.dims["1"] == 1
    with pytest.raises(NoGluing):
        lift(fix5, simple(a2, "1"))


def test_partition_validation(fix5):
    with pytest.raises(GlueError):
        glue_from_partition(fix5.algebra, [["1", "2"], ["2", "3", "4"]])
    with pytest.raises(GlueError):
        glue_from_partition(fix5.algebra, [["1", "2"], ["3"]])


def test_bm1_structure():
    g = build_bm1_example()
    assert g.algebra.dim == 60
    assert g.mode == PARTITION
    assert len(g.connectors) == 8
    flags, bad = structural_hypotheses(g)
    assert flags == {"H1": True, "H2": True, "H3": False}
    assert bad["H3"]


@pytest.mark.slow
def test_bm1_verifier():
    report = verify_bm1(build_bm1_example())
    assert report.status == "pass"
