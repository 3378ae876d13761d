import json

import pytest

from quiverphi.algebra import simple
from quiverphi.errors import AlgebraMismatch, FingerprintMismatch, MalformedRegistry, NotIndecomposable, UnknownClass
from quiverphi.registry import ClassId, IsoRegistry, load_registry, save_registry
from quiverphi.repmod import direct_sum, make_representation


def test_isomorphic_modules_share_a_class(a2):
    reg = IsoRegistry(a2)
    first = reg.register(a2.projective("2"))
    again = reg.register(simple(a2, "2"))
    assert first == again
    assert first.projective
    other = reg.register(simple(a2, "1"))
    assert other == ClassId(1)
    assert not other.projective
    assert len(reg) == 2
    assert str(first) == "#0P"


def test_register_rejects_sums_and_foreign_modules(a2, dual_numbers):
    reg = IsoRegistry(a2)
    with pytest.raises(NotIndecomposable):
        reg.register(direct_sum(simple(a2, "1"), simple(a2, "2")))
    with pytest.raises(AlgebraMismatch):
        reg.register(simple(dual_numbers, "1"))
    with pytest.raises(UnknownClass):
        reg.representative(5)


def test_register_summands(a2):
    reg = IsoRegistry(a2)
    ids = reg.register_summands(direct_sum(simple(a2, "1"), a2.projective("1")))
    assert len(set(ids)) == 2


def test_save_and_load(tmp_path, a2):
    reg = IsoRegistry(a2)
    for v in a2.vertices:
        reg.register(simple(a2, v).named(f"S{v}"))
    reg.register(a2.projective("1"))
    path = str(tmp_path / "nested" / "reg.json")
    save_registry(reg, path)
    loaded = load_registry(path, a2)
    assert [cid for cid, _ in loaded] == [cid for cid, _ in reg]
    assert [rep for _, rep in loaded] == [rep for _, rep in reg]
    assert loaded.representative(0).name == "S1"
    assert loaded.lookup(simple(a2, "2")) == ClassId(1)


def test_saved_registry_is_deterministic(tmp_path, a2):
    reg = IsoRegistry(a2)
    reg.register(make_representation(a2, {"1": 1, "2": 1}, {"a": [[1]]}, name="P1"))
    one, two = tmp_path / "one.json", tmp_path / "two.json"
    save_registry(reg, str(one))
    save_registry(reg, str(two))
    assert one.read_bytes() == two.read_bytes()
    doc = json.loads(one.read_text())
    assert doc["algebra_fingerprint"] == a2.fingerprint
    assert doc["classes"][0]["maps"]["a"] == [[1]]


def test_fingerprint_mismatch(tmp_path, a2, a3_rad):
    reg = IsoRegistry(a2)
    reg.register(simple(a2, "1"))
    path = str(tmp_path / "reg.json")
    save_registry(reg, path)
    with pytest.raises(FingerprintMismatch):
        load_registry(path, a3_rad)


def test_malformed_registry(tmp_path, a2):
    path = tmp_path / "bad.json"
    path.write_text('{"field": "Q"}')
    with pytest.raises(MalformedRegistry):
        load_registry(str(path), a2)
    with pytest.raises(MalformedRegistry):
        load_registry(str(tmp_path / "missing.json"), a2)


def test_registry_errors_are_usage_errors(tmp_path, a2):
    with pytest.raises(MalformedRegistry) as info:
        load_registry(str(tmp_path / "missing.json"), a2)
    assert info.value.exit_code == 2
