"""
Krull-Schmidt decomposition and isomorphism tests.

A module is split along the Fitting decomposition of an endomorphism whose
minimal polynomial has two coprime factors. A module that no candidate splits
is accepted as indecomposable only with a locality certificate for its
endomorphism ring: the trace-form radical must be a nilpotent ideal and the
quotient must be a field.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from .errors import AlgebraMismatch, CertificationFailed
from .linalg import Echelon, FieldSpec, Matrix, Subspace, nullspace
from .repmod import (HomBasis, Morphism, Representation, Subrep, hom_space, identity_morphism,
                     subrepresentation)

if TYPE_CHECKING:
    from .registry import ClassId, IsoRegistry

log = logging.getLogger(__name__)

_X = sympy.Symbol("x")


@dataclass(frozen=True)
class EndCertificate:
    end_dim: int
    radical_dim: int
    residue_degree: int


# polynomials in an endomorphism


def minimal_polynomial(f: Morphism) -> List[Any]:
    """Coefficients of the minimal polynomial of f, lowest degree first, monic."""
    M = f.source
    fs = M.field
    ech = Echelon(fs)
    power = identity_morphism(M)
    for k in range(M.dim + 1):
        vec = {(0, i): x for i, x in enumerate(power.vector()) if x}
        vec[(1, k)] = fs.one
        r = ech.reduce(vec)
        if not any(key[0] == 0 for key in r):
            return [r.get((1, i), fs.zero) for i in range(k + 1)]
        ech._insert_reduced(r)
        power = f @ power
    raise AssertionError("minimal polynomial degree exceeds the dimension")


def _to_field(c, fs: FieldSpec):
    if fs.p:
        return fs.coerce(int(c))
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def factor_polynomial(coeffs: Sequence[Any], fs: FieldSpec) -> List[Tuple[List[Any], int]]:
    """Irreducible factors over the ground field as (coefficients highest first, multiplicity)."""
    high = list(reversed(coeffs))
    if fs.p:
        poly = sympy.Poly([int(c) for c in high], _X, modulus=fs.p)
    else:
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, high)],
                          _X, domain=sympy.QQ)
    _, factors = poly.factor_list()
    return [([_to_field(c, fs) for c in g.all_coeffs()], e) for g, e in factors]


def evaluate(coeffs_high: Sequence[Any], f: Morphism) -> Morphism:
    M = f.source
    fs = M.field
    acc = {v: Matrix.zeros(M.dims[v], M.dims[v], fs) for v in M.algebra.vertices}
    for c in coeffs_high:
        acc = {v: f.components[v] @ acc[v] + Matrix.scalar(M.dims[v], c, fs)
               for v in M.algebra.vertices}
    return Morphism(M, M, acc)


def _trace(f: Morphism) -> Any:
    fs = f.source.field
    t = fs.zero
    for m in f.components.values():
        for i in range(m.rows):
            t += m[i, i]
    return fs.norm(t)


# splitting


def fitting_split(f: Morphism) -> Optional[Tuple[Subrep, Subrep]]:
    """M = ker g(f)^e + im g(f)^e for the first irreducible factor g^e of the minimal polynomial."""
    fs = f.source.field
    factors = factor_polynomial(minimal_polynomial(f), fs)
    if len(factors) < 2:
        return None
    g, e = factors[0]
    phi = evaluate(g, f)
    psi = phi
    for _ in range(e - 1):
        psi = psi @ phi
    ker, im = psi.kernel(), psi.image()
    if ker.rep.is_zero() or im.rep.is_zero():
        return None
    return ker, im


def _extra_candidates(E: HomBasis) -> Iterator[Morphism]:
    ms = list(E.morphisms)
    n = len(ms)
    if n < 2:
        return
    yield E.combination(list(range(1, n + 1)))
    for i in range(n):
        for j in range(i + 1, n):
            yield ms[i] + ms[j]
    for i in range(n):
        for j in range(n):
            yield ms[i] @ ms[j]
    for c in (2, -1):
        for i in range(n):
            for j in range(i + 1, n):
                yield ms[i] + ms[j].scale(c)


def _support_components(M: Representation) -> List[Representation]:
    verts = [v for v in M.algebra.vertices if M.dims[v]]
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for arrow in M.algebra.quiver.arrows:
        if not M.maps[arrow.label].is_zero():
            parent[find(arrow.source)] = find(arrow.target)
    groups: Dict[str, List[str]] = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    if len(groups) < 2:
        return [M]
    fs = M.field
    out = []
    for members in groups.values():
        spaces = {v: [tuple(fs.one if i == j else fs.zero for i in range(M.dims[v]))
                      for j in range(M.dims[v])] for v in members}
        out.append(subrepresentation(M, spaces).rep)
    return out


def _end_coordinates(E: HomBasis) -> Subspace:
    total = len(E[0].vector()) if E.dim else 0
    return Subspace([m.vector() for m in E], total, E.source.field)


def _local_certificate(M: Representation, E: HomBasis) -> Optional[EndCertificate]:
    fs = M.field
    r = E.dim
    if r == 1:
        return EndCertificate(1, 0, 1)
    coords = _end_coordinates(E)
    ms = list(E.morphisms)
    products = [[ms[i] @ ms[j] for j in range(r)] for i in range(r)]
    traces = [[_trace(p) for p in row] for row in products]
    gram = [{j: x for j, x in enumerate(row) if x} for row in traces]
    rad = [tuple(v.get(j, fs.zero) for j in range(r)) for v in nullspace(gram, r, fs)]
    rad_space = Subspace(rad, r, fs)
    rad_maps = [E.combination(t) for t in rad]

    # the trace radical must be a two-sided ideal
    for t in rad_maps:
        for m in ms:
            for prod in (m @ t, t @ m):
                c = coords.coordinates(prod.vector())
                if c is None or not rad_space.contains(c):
                    return None
    # and nilpotent
    total = len(ms[0].vector())
    layer = rad_maps
    while layer:
        nxt = Subspace([(t @ x).vector() for t in rad_maps for x in layer], total, fs)
        if len(nxt) >= len(layer):
            return None
        layer = [E.combination(coords.coordinates(v)) for v in nxt.basis]

    q = r - len(rad)
    if q == 1:
        return EndCertificate(r, len(rad), 1)
    comp = rad_space.complement()
    for i in comp:
        for j in comp:
            comm = (ms[i] @ ms[j]) + (ms[j] @ ms[i]).scale(-1)
            c = coords.coordinates(comm.vector())
            if c is None or not rad_space.contains(c):
                return None
    trials = [ms[i] for i in comp] + [E.combination([k + 1 if k in comp else 0 for k in range(r)])]
    for f in trials:
        factors = factor_polynomial(minimal_polynomial(f), fs)
        if len(factors) == 1 and len(factors[0][0]) - 1 == q:
            return EndCertificate(r, len(rad), q)
    return None


def endomorphism_certificate(M: Representation) -> EndCertificate:
    """Certify that End(M) is local; raises CertificationFailed otherwise."""
    cert = _local_certificate(M, hom_space(M, M))
    if cert is None:
        raise CertificationFailed(f"End({M!r}) could not be certified local")
    return cert


def decompose(M: Representation) -> List[Representation]:
    """Indecomposable summands of M, in a deterministic order."""
    if M.is_zero():
        return []
    parts = _support_components(M)
    if len(parts) > 1:
        return [X for P in parts for X in decompose(P)]
    E = hom_space(M, M)
    if E.dim == 1:
        return [M]
    for f in E.morphisms:
        split = fitting_split(f)
        if split:
            return decompose(split[0].rep) + decompose(split[1].rep)
    if _local_certificate(M, E) is not None:
        return [M]
    for f in _extra_candidates(E):
        split = fitting_split(f)
        if split:
            return decompose(split[0].rep) + decompose(split[1].rep)
    raise CertificationFailed(f"no splitting endomorphism and no locality certificate for {M!r}")


def is_indecomposable(M: Representation) -> bool:
    return len(decompose(M)) == 1


# isomorphism


def iso_indecomposable(X: Representation, Y: Representation) -> bool:
    """Exact for indecomposable X: some basis element of Hom(X, Y) is invertible iff X = Y."""
    if X.algebra is not Y.algebra:
        raise AlgebraMismatch("isomorphism test across algebras")
    if X.dims != Y.dims:
        return False
    return any(h.is_iso() for h in hom_space(X, Y))


def _sweep(H: HomBasis) -> Iterator[Morphism]:
    yield from H.morphisms
    n = H.dim
    if n > 1:
        yield H.combination([1] * n)
        yield H.combination(list(range(1, n + 1)))
        if n <= 12:
            for i in range(n):
                for j in range(i + 1, n):
                    yield H[i] + H[j]


def same_summands(xs: Sequence[Representation], ys: Sequence[Representation]) -> bool:
    if len(xs) != len(ys):
        return False
    left = list(ys)
    for X in xs:
        for k, Y in enumerate(left):
            if iso_indecomposable(X, Y):
                del left[k]
                break
        else:
            return False
    return True


def is_isomorphic(M: Representation, N: Representation) -> bool:
    if M.algebra is not N.algebra:
        raise AlgebraMismatch(f"isomorphism test between {M.algebra.name} and {N.algebra.name}")
    if M.dims != N.dims:
        return False
    if M.is_zero():
        return True
    H = hom_space(M, N)
    if not H.dim:
        return False
    if any(h.is_iso() for h in _sweep(H)):
        return True
    return same_summands(decompose(M), decompose(N))


# registry helpers


def register(registry: "IsoRegistry", M: Representation) -> "ClassId":
    return registry.register(M)


def multiplicities(M: Representation, registry: "IsoRegistry") -> Dict["ClassId", int]:
    out: Dict["ClassId", int] = {}
    for cid in registry.register_summands(M):
        out[cid] = out.get(cid, 0) + 1
    return dict(sorted(out.items()))
