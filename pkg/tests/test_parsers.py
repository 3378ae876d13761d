import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import sample
from quiverphi.decomp import is_isomorphic
from quiverphi.errors import DslError
from quiverphi.gallery import build_cpq
from quiverphi.linalg import FieldSpec
from quiverphi.morita import EXTENDED
from quiverphi.parsers import detect_format, parse_algebra, parse_document, parse_module, parse_source, serialize
from quiverphi.parsers.qa import AlgebraDecl, ArrowDecl, ModuleDecl, MapDecl, Scalar, SourceDocument, Term


def read(name):
    with open(sample(name), encoding="utf-8") as fh:
        return fh.read()


A2_TEXT = """
algebra A2 over Q {
    vertices 1 2;
    arrows a:1->2;
}
"""


def test_fix2_sample():
    doc = parse_document(read("fix2.qa"))
    A = doc.algebra("A2")
    assert A.dim == 3
    S12 = doc.modules["S12"]
    assert S12.dimension_vector == (1, 1)
    assert is_isomorphic(S12, A.projective("1"))


def test_fix5_sample(fix5):
    doc = parse_document(read("fix5.qa"))
    g = doc.gluings["FIX5"]
    assert g.algebra.dim == 8
    assert doc.algebra() is g.algebra
    assert g.algebra.fingerprint == fix5.algebra.fingerprint


def test_cpq_sample_matches_the_builder(cpq):
    doc = parse_document(read("cpq.qa"))
    assert doc.params == {"p": Fraction(2), "q": Fraction(3)}
    g = doc.gluings["C"]
    assert g.mode == EXTENDED
    assert g.algebra.dim == cpq.algebra.dim
    assert doc.modules["Sc1"].dims["c1"] == 1


def test_field_and_truncation():
    A = parse_algebra("algebra L over Q(5) { vertices 1; arrows x:1->1; truncate 3; }")
    assert A.field == FieldSpec(5)
    assert A.dim == 3


def test_module_literal_equals_projective():
    A = parse_algebra(A2_TEXT)
    P1 = parse_module("module P1 over Whatever { dims 1:1 2:1; map a = [[1]]; }", A)
    assert is_isomorphic(P1, A.projective("1"))
    assert P1.name == "P1"


def test_unknown_arrow_is_positioned():
    text = "algebra A over Q {\n    vertices 1 2;\n    arrows a:1->2;\n    relations a*z;\n}\n"
    with pytest.raises(DslError) as info:
        parse_document(text)
    assert info.value.line == 4
    assert info.value.exit_code == 2


def test_syntax_error_is_positioned():
    with pytest.raises(DslError) as info:
        parse_source("algebra A over Q {\n    arrows a 1->2;\n}\n")
    assert info.value.line == 2
    assert str(info.value).startswith("2:")


def test_unbound_parameter():
    text = ("algebra A over Q {\n    vertices 1 2 3;\n    arrows a:1->2, b:2->3, c:1->2;\n"
            "    relations a*b - r c*b;\n}\n")
    with pytest.raises(DslError) as info:
        parse_document(text)
    assert "r" in info.value.message
    assert info.value.line == 4


def test_bound_parameter_scales_a_relation():
    text = ("params r=2;\nalgebra A over Q {\n    vertices 1 2 3;\n    arrows a:1->2, b:2->3, c:1->2;\n"
            "    relations a*b - r c*b;\n}\n")
    A = parse_document(text).algebra("A")
    # a*b and c*b span one class
    assert A.dim == 3 + 3 + 1


def test_wrong_matrix_shape():
    A = parse_algebra(A2_TEXT)
    with pytest.raises(DslError) as info:
        parse_module("module M over A2 {\n    dims 1:1 2:1;\n    map a = [[1, 2]];\n}\n", A)
    assert info.value.line == 3


def test_unknown_algebra_in_module():
    with pytest.raises(DslError):
        parse_document(A2_TEXT + "module S over B { dims 1:1; }\n")


@pytest.mark.parametrize("name", ["fix2.qa", "fix5.qa", "cpq.qa"])
def test_samples_survive_rendering(name):
    src = parse_source(read(name))
    assert parse_source(serialize(src)) == src


def test_serialize_domain_values(cpq):
    text = serialize(cpq)
    again = parse_document(text)
    assert again.algebra().dim == cpq.algebra.dim
    assert serialize(cpq) == text


def test_serialize_module_over_a_gluing(fix5):
    from quiverphi.algebra import simple

    M = simple(fix5.algebra, "1").named("S1")
    doc = parse_document(serialize(M))
    assert doc.modules["S1"].dimension_vector == (1, 0, 0, 0)


NAMES = st.builds(lambda p, i: f"{p}{i}", st.sampled_from(["v", "x", "y"]), st.integers(0, 99))
FRACTIONS = st.fractions(min_value=0, max_value=20, max_denominator=7)


@st.composite
def algebra_decls(draw):
    verts = tuple(draw(st.lists(st.integers(0, 9), min_size=1, max_size=4, unique=True).map(
        lambda xs: [f"v{x}" for x in xs])))
    arrows = []
    for i in range(draw(st.integers(0, 4))):
        arrows.append(ArrowDecl(f"x{i}", draw(st.sampled_from(verts)), draw(st.sampled_from(verts))))
    rels = []
    for _ in range(draw(st.integers(0, 2))):
        terms = []
        for _ in range(draw(st.integers(1, 3))):
            coef = draw(st.one_of(st.none(), FRACTIONS.map(Scalar), st.just(Scalar(None, "p"))))
            path = tuple(draw(st.lists(NAMES, min_size=1, max_size=3)))
            terms.append(Term(path, coef, draw(st.booleans())))
        rels.append(tuple(terms))
    truncate = draw(st.one_of(st.none(), st.integers(1, 9)))
    return AlgebraDecl("A", FieldSpec(), verts, tuple(arrows), tuple(rels), truncate)


@st.composite
def module_decls(draw):
    rows = draw(st.integers(1, 3))
    cols = draw(st.integers(1, 3))
    entry = st.builds(lambda v, n: Scalar(v, None, n), FRACTIONS, st.booleans())
    matrix = tuple(tuple(draw(entry) for _ in range(cols)) for _ in range(rows))
    return ModuleDecl("M", "A", (("v0", cols), ("v1", rows)), (MapDecl("x0", matrix),))


@settings(max_examples=50, deadline=None)
@given(algebra_decls(), module_decls())
def test_rendering_is_read_back_unchanged(alg, mod):
    src = SourceDocument((alg, mod))
    assert parse_source(serialize(src)) == src


def test_detect_format(tmp_path):
    qa = tmp_path / "a.qa"
    qa.write_text(A2_TEXT)
    assert detect_format(str(qa)) == "qa"
    txt = tmp_path / "a.txt"
    txt.write_text("# note\n" + A2_TEXT)
    assert detect_format(str(txt)) == "qa"
    reg = tmp_path / "reg.json"
    reg.write_text(json.dumps({"version": 1, "field": "Q", "algebra_fingerprint": "x", "classes": []}))
    assert detect_format(str(reg)) == "registry"
    other = tmp_path / "other.json"
    other.write_text('{"tests": []}')
    assert detect_format(str(other)) == "unknown"
    assert detect_format(str(tmp_path / "missing.bin")) == "unknown"
