import pytest

from quiverphi.algebra import Relation, from_presentation, injective, opposite_algebra, radical_projective, simple
from quiverphi.errors import (DanglingEndpoint, DuplicateLabel, InvalidPath, NotAdmissible, RelationError,
                              UnknownVertex)
from quiverphi.linalg import FieldSpec
from quiverphi.quiver import Path, build_quiver, paths_of_length, paths_up_to

Q = FieldSpec()


def commutative_square():
    q = build_quiver(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])
    return q, from_presentation(q, [Relation.binomial(q.path(["a", "b"]), q.path(["c", "d"]))], Q, name="Sq")


def test_quiver_validation():
    with pytest.raises(DuplicateLabel):
        build_quiver(["1", "1"], [])
    with pytest.raises(DuplicateLabel):
        build_quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])
    with pytest.raises(DanglingEndpoint):
        build_quiver(["1"], [("a", "1", "2")])


def test_paths():
    q = build_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    assert q.path(["a", "b"]) == Path("1", "3", ("a", "b"))
    with pytest.raises(InvalidPath):
        q.path(["b", "a"])
    with pytest.raises(InvalidPath):
        q.path(["z"])
    with pytest.raises(UnknownVertex):
        q.trivial("9")
    assert [str(p) for p in paths_up_to(q, 3)] == ["e_1", "e_2", "e_3", "a", "b", "a*b"]
    assert paths_of_length(q, 3) == []
    assert q.is_acyclic()
    assert q.opposite().arrow("a").source == "2"


def test_a2_basis(a2):
    assert a2.dim == 3
    assert a2.loewy_length == 2
    assert [str(p) for p in a2.basis] == ["e_1", "e_2", "a"]


def test_dual_numbers(dual_numbers):
    assert dual_numbers.dim == 2
    assert dual_numbers.is_zero(dual_numbers.quiver.path(["x", "x"]))


def test_commutativity_relation():
    q, sq = commutative_square()
    assert sq.dim == 9
    ab, cd = q.path(["a", "b"]), q.path(["c", "d"])
    assert sq.normal_form(ab) == sq.normal_form(cd)
    assert not sq.is_zero(ab)
    assert sq.is_zero({ab: 1, cd: -1})


def test_multiplication_is_associative():
    q, sq = commutative_square()
    a, b = sq.normal_form(q.path(["a"])), sq.normal_form(q.path(["b"]))
    e1 = sq.normal_form(q.trivial("1"))
    assert sq.multiply(sq.multiply(e1, a), b) == sq.multiply(e1, sq.multiply(a, b))
    assert sq.multiply(b, a) == tuple([0] * sq.dim)


def test_loop_without_relation_is_not_admissible():
    q = build_quiver(["1"], [("x", "1", "1")])
    with pytest.raises(NotAdmissible):
        from_presentation(q, [], Q, l_max=4)


def test_relation_validation():
    q = build_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "2")])
    with pytest.raises(RelationError):
        Relation.binomial(q.path(["a", "b"]), q.path(["c"]))
    with pytest.raises(RelationError):
        Relation.monomial(q.path(["a"]))
    with pytest.raises(RelationError):
        Relation(((0, q.path(["a", "b"])),))


def test_relation_vanishing_mod_p():
    q = build_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    rel = Relation(((7, q.path(["a", "b"])),))
    with pytest.raises(RelationError):
        from_presentation(q, [rel], FieldSpec(7))


def test_truncation():
    q = build_quiver(["1"], [("x", "1", "1")])
    a = from_presentation(q, [], Q, truncate_at=3)
    assert a.dim == 3
    assert a.loewy_length == 3


def test_opposite(a3_rad):
    op = a3_rad.opposite()
    assert op.dim == a3_rad.dim
    assert op.opposite() is a3_rad
    assert op.quiver.arrow("a").source == "2"
    assert op.is_zero(op.quiver.path(["b", "a"]))


def test_commutative_algebra_is_its_own_opposite(dual_numbers):
    op = opposite_algebra(dual_numbers)
    assert op.dim == dual_numbers.dim == 2
    assert op.is_zero(op.quiver.path(["x", "x"]))
    assert not op.is_zero(op.quiver.path(["x"]))


def test_fingerprint_is_stable(a2):
    again = from_presentation(build_quiver(["1", "2"], [("a", "1", "2")]), [], Q, name="other")
    assert a2.fingerprint == again.fingerprint
    assert a2.fingerprint != a2.opposite().fingerprint


def test_distinguished_modules(a2):
    assert a2.projective("1").dimension_vector == (1, 1)
    assert a2.projective("2").dimension_vector == (0, 1)
    assert injective(a2, "1").dimension_vector == (1, 0)
    assert injective(a2, "2").dimension_vector == (1, 1)
    assert simple(a2, "2").dimension_vector == (0, 1)
    assert radical_projective(a2, "1").dimension_vector == (0, 1)
    assert radical_projective(a2, "2").is_zero()


def test_structure_constants_cover_the_basis(a2):
    table = a2.structure_constants()
    assert len(table) == a2.dim ** 2
    e1, e2, a = range(3)
    assert table[(e1, a)] == {a: 1}
    assert table[(a, e2)] == {a: 1}
    assert table[(a, e1)] == {}
