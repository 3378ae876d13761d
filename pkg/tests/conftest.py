import os

import pytest

from quiverphi.algebra import Relation, from_presentation
from quiverphi.gallery import build_cpq, build_fix5
from quiverphi.linalg import FieldSpec
from quiverphi.quiver import build_quiver

SAMPLES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "samples")

Q = FieldSpec()


def sample(name):
    return os.path.join(SAMPLES, name)


@pytest.fixture
def a2():
    """1 -> 2, no relations."""
    return from_presentation(build_quiver(["1", "2"], [("a", "1", "2")]), [], Q, name="A2")


@pytest.fixture
def a3_rad():
    """1 -> 2 -> 3 with a*b = 0; gl.dim 2."""
    q = build_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    return from_presentation(q, [Relation.monomial(q.path(["a", "b"]))], Q, name="A3")


@pytest.fixture
def dual_numbers():
    """k[x]/(x^2)."""
    q = build_quiver(["1"], [("x", "1", "1")])
    return from_presentation(q, [Relation.monomial(q.path(["x", "x"]))], Q, name="D")


@pytest.fixture
def nakayama3():
    """The cyclic Nakayama algebra on three vertices with rad^2 = 0."""
    q = build_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])
    rels = [Relation.monomial(q.path(w)) for w in (["a", "b"], ["b", "c"], ["c", "a"])]
    return from_presentation(q, rels, Q, name="N3")


@pytest.fixture
def kronecker():
    q = build_quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
    return from_presentation(q, [], Q, name="K")


@pytest.fixture
def fix5():
    return build_fix5()


@pytest.fixture(scope="session")
def cpq():
    return build_cpq(2, 2, 3)
