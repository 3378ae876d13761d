"""
Representations of bound quivers.

A representation stores one matrix per arrow; ``maps[a]`` has shape
``(dims[t(a)], dims[s(a)])`` and acts on column vectors. Paths act in reading
order, so ``a*b`` acts as ``maps[b] @ maps[a]``.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import BoundAlgebra
from .errors import AlgebraMismatch, InvalidPath, NoGluing, NotBound, ShapeMismatch, UnknownVertex
from .linalg import Matrix, Subspace, Vector, image_basis, is_invertible, kernel_basis, nullspace, rank
from .quiver import Path

log = logging.getLogger(__name__)

MatrixLike = Union[Matrix, Sequence[Sequence[Any]]]


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: BoundAlgebra
    dims: Dict[str, int]
    maps: Dict[str, Matrix]
    name: Optional[str] = None

    def __repr__(self) -> str:
        label = self.name or "M"
        return f"<{label} dims={self.dimension_vector} over {self.algebra.name}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.algebra is other.algebra and self.dims == other.dims
                and self.maps == other.maps)

    __hash__ = None

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    @property
    def dimension_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def is_zero(self) -> bool:
        return self.dim == 0

    def named(self, name: str) -> "Representation":
        return Representation(self.algebra, self.dims, self.maps, name)

    def path_matrix(self, p: Path) -> Matrix:
        """T_p as a dims[t(p)] x dims[s(p)] matrix."""
        out = Matrix.identity(self.dims[p.source], self.field)
        for label in p.arrows:
            out = self.maps[label] @ out
        return out

    def offsets(self) -> Dict[str, int]:
        """Start of each vertex block in the flattened total space."""
        out, pos = {}, 0
        for v in self.algebra.vertices:
            out[v] = pos
            pos += self.dims[v]
        return out


def _as_matrix(m: MatrixLike, rows: int, cols: int, a: BoundAlgebra, label: str) -> Matrix:
    if isinstance(m, Matrix):
        if m.field != a.field:
            raise ShapeMismatch(f"map {label} is over {m.field.label}, algebra is over {a.field.label}")
        mat = m
    else:
        rows_in = [list(r) for r in m]
        if not rows_in and rows == 0:
            return Matrix.zeros(0, cols, a.field)
        width = len(rows_in[0]) if rows_in else 0
        if any(len(r) != width for r in rows_in):
            raise ShapeMismatch(f"map {label} has ragged rows")
        mat = Matrix.from_rows(rows_in, a.field, width)
    if mat.shape != (rows, cols):
        raise ShapeMismatch(f"map {label} has shape {mat.shape}, expected {(rows, cols)}")
    return mat


def _radical_chain_vanishes(M: Representation, steps: int) -> bool:
    layer = {v: _units(M.dims[v], M.field) for v in M.algebra.vertices}
    for _ in range(steps):
        layer = _arrow_images(M, layer)
        if not any(layer.values()):
            return True
    return not any(layer.values())


def _units(n: int, f) -> List[Vector]:
    out = []
    for j in range(n):
        v = [f.zero] * n
        v[j] = f.one
        out.append(tuple(v))
    return out


def _arrow_images(M: Representation, spaces: Mapping[str, Sequence[Vector]]) -> Dict[str, List[Vector]]:
    """At each vertex w, a basis of the sum of T_a(spaces[s(a)]) over arrows a into w."""
    f = M.field
    out: Dict[str, List[Vector]] = {}
    for w in M.algebra.vertices:
        gens: List[Vector] = []
        for a in M.algebra.quiver.arrows_into(w):
            T = M.maps[a.label]
            gens.extend(T.apply(x) for x in spaces[a.source])
        if gens and M.dims[w]:
            out[w] = image_basis(Matrix.from_columns(gens, M.dims[w], f))
        else:
            out[w] = []
    return out


def check_bound(M: Representation) -> None:
    """Raise NotBound unless every relation and J^L act as zero."""
    a = M.algebra
    for rel in a.relations:
        s, t = rel.source, rel.target
        if not M.dims[s] or not M.dims[t]:
            continue
        acc = Matrix.zeros(M.dims[t], M.dims[s], a.field)
        for c, p in rel.terms:
            acc = acc + M.path_matrix(p).scale(c)
        if not acc.is_zero():
            raise NotBound(str(rel))
    if not _radical_chain_vanishes(M, a.loewy_length):
        raise NotBound(f"J^{a.loewy_length}")


def make_representation(a: BoundAlgebra, dims: Mapping[str, int], maps: Mapping[str, MatrixLike],
                        name: Optional[str] = None, check: bool = True) -> Representation:
    full: Dict[str, int] = {v: 0 for v in a.vertices}
    for v, d in dims.items():
        v = str(v)
        if not a.quiver.has_vertex(v):
            raise UnknownVertex(f"unknown vertex {v!r}")
        if d < 0:
            raise ShapeMismatch(f"negative dimension {d} at vertex {v}")
        full[v] = int(d)
    mats: Dict[str, Matrix] = {}
    for label in maps:
        a.quiver.arrow(label)
    for arrow in a.quiver.arrows:
        rows, cols = full[arrow.target], full[arrow.source]
        given = maps.get(arrow.label)
        if given is None:
            mats[arrow.label] = Matrix.zeros(rows, cols, a.field)
        else:
            mats[arrow.label] = _as_matrix(given, rows, cols, a, arrow.label)
    M = Representation(a, full, mats, name)
    if check:
        check_bound(M)
    return M


def zero_representation(a: BoundAlgebra) -> Representation:
    return make_representation(a, {}, {}, name="0", check=False)


def dimension_vector(M: Representation) -> Dict[str, int]:
    return dict(M.dims)


def support(M: Representation) -> List[str]:
    return [v for v in M.algebra.vertices if M.dims[v]]


def direct_sum(M: Representation, N: Representation) -> Representation:
    if M.algebra is not N.algebra:
        raise AlgebraMismatch(f"direct sum of modules over {M.algebra.name} and {N.algebra.name}")
    dims = {v: M.dims[v] + N.dims[v] for v in M.algebra.vertices}
    maps = {l: M.maps[l].block_diag(N.maps[l]) for l in M.maps}
    return Representation(M.algebra, dims, maps)


def direct_sum_all(a: BoundAlgebra, modules: Iterable[Representation]) -> Representation:
    out = zero_representation(a)
    for M in modules:
        out = direct_sum(out, M)
    return out


def power(M: Representation, k: int) -> Representation:
    return direct_sum_all(M.algebra, [M] * k)


# subrepresentations and quotients


@dataclass(frozen=True, eq=False)
class Subrep:
    """A subrepresentation together with its inclusion into the ambient module."""

    rep: Representation
    ambient: Representation
    embedding: Dict[str, Matrix]

    def space(self, v: str) -> List[Vector]:
        return self.embedding[v].columns()


@dataclass(frozen=True, eq=False)
class Quotient:
    rep: Representation
    ambient: Representation
    projection: Dict[str, Matrix]


def subrepresentation(M: Representation, spaces: Mapping[str, Sequence[Sequence[Any]]],
                      name: Optional[str] = None) -> Subrep:
    """The subrepresentation with the given vertex spaces; raises ShapeMismatch if not closed."""
    f = M.field
    subs: Dict[str, Subspace] = {}
    for v in M.algebra.vertices:
        subs[v] = Subspace(spaces.get(v, ()), M.dims[v], f)
    maps: Dict[str, Matrix] = {}
    for arrow in M.algebra.quiver.arrows:
        T = M.maps[arrow.label]
        src, tgt = subs[arrow.source], subs[arrow.target]
        cols = []
        for x in src.basis:
            coords = tgt.coordinates(T.apply(x))
            if coords is None:
                raise ShapeMismatch(f"spaces are not closed under arrow {arrow.label}")
            cols.append(coords)
        maps[arrow.label] = Matrix.from_columns(cols, len(tgt), f)
    dims = {v: len(subs[v]) for v in M.algebra.vertices}
    emb = {v: Matrix.from_columns(subs[v].basis, M.dims[v], f) for v in M.algebra.vertices}
    return Subrep(Representation(M.algebra, dims, maps, name), M, emb)


def generated_subrep(M: Representation, vectors: Mapping[str, Sequence[Sequence[Any]]]) -> Subrep:
    """The smallest subrepresentation containing ``vectors``."""
    f = M.field
    spaces = {v: Subspace(vectors.get(v, ()), M.dims[v], f) for v in M.algebra.vertices}
    frontier = {v: list(spaces[v].basis) for v in M.algebra.vertices}
    while any(frontier.values()):
        nxt: Dict[str, List[Vector]] = {v: [] for v in M.algebra.vertices}
        for arrow in M.algebra.quiver.arrows:
            T = M.maps[arrow.label]
            for x in frontier[arrow.source]:
                y = T.apply(x)
                target = spaces[arrow.target]
                if any(y) and not target.contains(y):
                    spaces[arrow.target] = Subspace(target.basis + [y], M.dims[arrow.target], f)
                    nxt[arrow.target].append(y)
        frontier = nxt
    return subrepresentation(M, {v: spaces[v].basis for v in M.algebra.vertices})


def quotient(M: Representation, sub: Subrep, name: Optional[str] = None) -> Quotient:
    f = M.field
    proj: Dict[str, Matrix] = {}
    comp: Dict[str, List[int]] = {}
    for v in M.algebra.vertices:
        base = sub.space(v)
        comp[v] = Subspace(base, M.dims[v], f).complement()
        full = Subspace(base + [_unit(M.dims[v], j, f) for j in comp[v]], M.dims[v], f)
        k = len(base)
        rows = [[] for _ in comp[v]]
        for j in range(M.dims[v]):
            coords = full.coordinates(_unit(M.dims[v], j, f))
            for r in range(len(comp[v])):
                rows[r].append(coords[k + r])
        proj[v] = Matrix.from_rows(rows, f, M.dims[v])
    maps: Dict[str, Matrix] = {}
    for arrow in M.algebra.quiver.arrows:
        T = M.maps[arrow.label]
        P = proj[arrow.target]
        cols = [P.apply(T.apply(_unit(M.dims[arrow.source], j, f))) for j in comp[arrow.source]]
        maps[arrow.label] = Matrix.from_columns(cols, len(comp[arrow.target]), f)
    dims = {v: len(comp[v]) for v in M.algebra.vertices}
    return Quotient(Representation(M.algebra, dims, maps, name), M, proj)


def _unit(n: int, j: int, f) -> Vector:
    v = [f.zero] * n
    v[j] = f.one
    return tuple(v)


def radical(M: Representation) -> Subrep:
    """rad M = M J, spanned at w by the images of the arrows ending at w."""
    layer = {v: _units(M.dims[v], M.field) for v in M.algebra.vertices}
    return subrepresentation(M, _arrow_images(M, layer))


def top(M: Representation) -> Representation:
    return quotient(M, radical(M)).rep


def radical_layers(M: Representation) -> List[Dict[str, int]]:
    """Dimension vectors of M J^n for n = 0, 1, ... until the layer vanishes."""
    out = []
    layer = {v: _units(M.dims[v], M.field) for v in M.algebra.vertices}
    while any(layer.values()):
        out.append({v: len(layer[v]) for v in M.algebra.vertices})
        layer = _arrow_images(M, layer)
    return out


def loewy_length(M: Representation) -> int:
    return len(radical_layers(M))


def socle(M: Representation) -> Subrep:
    """Vectors killed by every arrow."""
    f = M.field
    spaces: Dict[str, List[Vector]] = {}
    for v in M.algebra.vertices:
        outgoing = [M.maps[a.label] for a in M.algebra.quiver.arrows_from(v) if M.dims[a.target]]
        if not outgoing:
            spaces[v] = _units(M.dims[v], f)
            continue
        stacked = outgoing[0]
        for T in outgoing[1:]:
            stacked = stacked.vstack(T)
        spaces[v] = kernel_basis(stacked)
    return subrepresentation(M, spaces)


def is_projective(M: Representation) -> bool:
    """M is projective iff dim M equals the dimension of its projective cover."""
    t = top(M)
    cover = sum(t.dims[v] * M.algebra.projective(v).dim for v in M.algebra.vertices if t.dims[v])
    return cover == M.dim


def is_simple(M: Representation) -> bool:
    return M.dim == 1


# morphisms


@dataclass(frozen=True, eq=False)
class Morphism:
    """f = (f_v): source -> target with f_v of shape (target.dims[v], source.dims[v])."""

    source: Representation
    target: Representation
    components: Dict[str, Matrix]

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """self after other."""
        if other.target.algebra is not self.source.algebra:
            raise AlgebraMismatch("composing morphisms over different algebras")
        comps = {v: self.components[v] @ other.components[v] for v in self.source.algebra.vertices}
        return Morphism(other.source, self.target, comps)

    def compose(self, other: "Morphism") -> "Morphism":
        return self @ other

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target,
                        {v: self.components[v] + other.components[v] for v in self.components})

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, {v: m.scale(c) for v, m in self.components.items()})

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.components.values())

    def is_iso(self) -> bool:
        return all(is_invertible(m) for m in self.components.values())

    def commutes(self) -> bool:
        for arrow in self.source.algebra.quiver.arrows:
            lhs = self.components[arrow.target] @ self.source.maps[arrow.label]
            rhs = self.target.maps[arrow.label] @ self.components[arrow.source]
            if lhs != rhs:
                return False
        return True

    def kernel(self) -> Subrep:
        return subrepresentation(self.source,
                                 {v: kernel_basis(m) for v, m in self.components.items()})

    def image(self) -> Subrep:
        return subrepresentation(self.target,
                                 {v: image_basis(m) for v, m in self.components.items()})

    def vector(self) -> Tuple[Any, ...]:
        """All components flattened in vertex order."""
        out: List[Any] = []
        for v in self.source.algebra.vertices:
            out.extend(self.components[v].entries)
        return tuple(out)

    def is_surjective(self) -> bool:
        return all(rank(m) == m.rows for m in self.components.values())


def identity_morphism(M: Representation) -> Morphism:
    return Morphism(M, M, {v: Matrix.identity(M.dims[v], M.field) for v in M.algebra.vertices})


def morphism_from_vector(M: Representation, N: Representation, vec: Sequence[Any]) -> Morphism:
    f = M.field
    comps: Dict[str, Matrix] = {}
    pos = 0
    for v in M.algebra.vertices:
        r, c = N.dims[v], M.dims[v]
        comps[v] = Matrix(r, c, tuple(vec[pos:pos + r * c]), f)
        pos += r * c
    return Morphism(M, N, comps)


@dataclass(frozen=True, eq=False)
class HomBasis:
    source: Representation
    target: Representation
    morphisms: Tuple[Morphism, ...]

    def __len__(self) -> int:
        return len(self.morphisms)

    def __iter__(self):
        return iter(self.morphisms)

    def __getitem__(self, i: int) -> Morphism:
        return self.morphisms[i]

    @property
    def dim(self) -> int:
        return len(self.morphisms)

    def combination(self, coeffs: Sequence[Any]) -> Morphism:
        f = self.source.field
        vec = [f.zero] * sum(self.target.dims[v] * self.source.dims[v] for v in self.source.algebra.vertices)
        for c, m in zip(coeffs, self.morphisms):
            c = f.coerce(c)
            if c:
                for i, x in enumerate(m.vector()):
                    vec[i] = f.norm(vec[i] + c * x)
        return morphism_from_vector(self.source, self.target, vec)


def hom_space(M: Representation, N: Representation) -> HomBasis:
    """Basis of Hom(M, N): one linear system in the entries of every f_v."""
    if M.algebra is not N.algebra:
        raise AlgebraMismatch(f"Hom between modules over {M.algebra.name} and {N.algebra.name}")
    a = M.algebra
    f = a.field
    offset: Dict[str, int] = {}
    pos = 0
    for v in a.vertices:
        offset[v] = pos
        pos += N.dims[v] * M.dims[v]
    nvars = pos

    def var(v: str, i: int, k: int) -> int:
        return offset[v] + i * M.dims[v] + k

    rows: List[Dict[int, Any]] = []
    for arrow in a.quiver.arrows:
        s, t = arrow.source, arrow.target
        T, U = M.maps[arrow.label], N.maps[arrow.label]
        # f_t T - U f_s = 0, entry (i, j)
        for i in range(N.dims[t]):
            for j in range(M.dims[s]):
                row: Dict[int, Any] = {}
                for k in range(M.dims[t]):
                    x = T[k, j]
                    if x:
                        key = var(t, i, k)
                        row[key] = f.norm(row.get(key, 0) + x)
                for k in range(N.dims[s]):
                    x = U[i, k]
                    if x:
                        key = var(s, k, j)
                        row[key] = f.norm(row.get(key, 0) - x)
                row = {key: x for key, x in row.items() if x}
                if row:
                    rows.append(row)
    basis = []
    for sol in nullspace(rows, nvars, f):
        vec = [f.zero] * nvars
        for i, x in sol.items():
            vec[i] = x
        basis.append(morphism_from_vector(M, N, vec))
    return HomBasis(M, N, tuple(basis))


# restriction to the blocks of a glued algebra


def restrict(M: Representation, side: Union[str, int]) -> Representation:
    """Pi_A / Pi_B: keep the spaces and maps of one block of a glued algebra."""
    g = M.algebra.gluing
    if g is None:
        raise NoGluing(f"{M.algebra.name} carries no gluing metadata")
    block = g.block(side)
    dims = {v: M.dims[v] for v in block.vertices}
    maps = {a.label: M.maps[a.label] for a in block.quiver.arrows}
    try:
        return make_representation(block, dims, maps, name=M.name)
    except InvalidPath as e:
        raise NoGluing(str(e)) from None
