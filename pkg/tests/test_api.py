import pytest

from conftest import sample
from quiverphi import QuiverPhi, __version__
from quiverphi.config import RunConfig
from quiverphi.errors import ConfigError, NoGluing, UnknownClass
from quiverphi.homology import Finite


@pytest.fixture
def fix2():
    return QuiverPhi.from_file(sample("fix2.qa"))


def test_version():
    assert __version__ == "0.3.0"


def test_module_expressions(fix2):
    assert fix2.module("S1").dimension_vector == (1, 0)
    assert fix2.module("S12").dimension_vector == (1, 1)
    assert fix2.module("radP1").dimension_vector == (0, 1)
    assert fix2.module("I2").dimension_vector == (1, 1)
    M = fix2.module("S1 + P1")
    assert M.dimension_vector == (2, 1)
    assert M.name == "S1 + P1"
    with pytest.raises(UnknownClass):
        fix2.module("X9")
    with pytest.raises(ConfigError):
        fix2.module(" + ")


def test_homological_values(fix2):
    assert fix2.phi(fix2.module("S1+S2")).value == 1
    assert fix2.pd(fix2.module("S1")) == Finite(1)
    assert fix2.id(fix2.module("S2")) == Finite(1)
    assert [X.dimension_vector for X in fix2.syzygies(fix2.module("S1"), 2)] == [(1, 0), (0, 1), (0, 0)]
    assert fix2.phidim_suite().value == 1


def test_plain_algebra_has_no_gluing(fix2):
    with pytest.raises(NoGluing):
        fix2.gluing
    with pytest.raises(NoGluing):
        fix2.hypotheses()


def test_missing_or_foreign_input(tmp_path):
    with pytest.raises(ConfigError):
        QuiverPhi.from_file(str(tmp_path / "missing.qa"))
    other = tmp_path / "data.json"
    other.write_text("{}")
    with pytest.raises(ConfigError):
        QuiverPhi.from_file(str(other))


def test_examples():
    with pytest.raises(ConfigError):
        QuiverPhi.example("nope")
    qp = QuiverPhi.example("fix5")
    assert qp.verify("lemma3.1").status == "pass"
    assert qp.hypotheses().h4 == "holds"
    with pytest.raises(ConfigError):
        qp.verify("bogus")
    combined = qp.verify_all(["lemma3.1", "prop3.5"])
    assert combined.check == "lemma3.1+prop3.5"
    assert combined.status == "pass"


def test_example_over_a_prime_field():
    qp = QuiverPhi.example("fix5", RunConfig(field=7))
    assert qp.algebra.field.label == "Q(7)"
    assert qp.algebra.dim == 8


def test_registry_round_trip(tmp_path, fix2):
    fix2.phi(fix2.module("S1+S2"))
    path = fix2.save_registry(str(tmp_path / "reg.json"))
    again = QuiverPhi.from_file(sample("fix2.qa"))
    loaded = again.load_registry(path)
    assert len(loaded) == len(fix2.registry)
    assert again.registry is loaded


def test_opposite(fix2):
    op = fix2.opposite()
    assert op.algebra.quiver.arrow("a").source == "2"
    assert op.pd(op.module("S2")) == Finite(1)
