"""
Bound quiver algebras kQ/I.

The ideal is closed degree by degree inside kQ/J^(L_max+1). Monomials are ordered
by length first and, within a length, by reversed arrow order, and the pivot of an
ideal row is its smallest monomial; so a relation always rewrites its lowest
degree term, and among paths of equal length the one using later-declared arrows.
The algebra basis is the set of non-pivot paths of length below the Loewy length.
"""

from __future__ import annotations
import hashlib
import heapq
import itertools
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import AlgebraMismatch, NotAdmissible, RelationError
from .linalg import Echelon, FieldSpec, Matrix
from .quiver import Path, Quiver, paths_of_length

if TYPE_CHECKING:
    from .repmod import Representation

log = logging.getLogger(__name__)

DEFAULT_L_MAX = 12


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length at least 2."""

    terms: Tuple[Tuple[Any, Path], ...]

    def __post_init__(self):
        if not self.terms:
            raise RelationError("empty relation")
        if all(Fraction(c) == 0 for c, _ in self.terms):
            raise RelationError("relation has only zero coefficients")
        s, t = self.terms[0][1].source, self.terms[0][1].target
        for _, p in self.terms:
            if (p.source, p.target) != (s, t):
                raise RelationError(f"relation mixes {s}->{t} with {p.source}->{p.target}")
            if p.length < 2:
                raise RelationError(f"relation term {p} is not in J^2")

    @classmethod
    def monomial(cls, path: Path) -> "Relation":
        return cls(((Fraction(1), path),))

    @classmethod
    def binomial(cls, p: Path, q: Path, c: Any = 1) -> "Relation":
        """p - c q."""
        return cls(((Fraction(1), p), (-Fraction(c), q)))

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    def reversed(self) -> "Relation":
        return Relation(tuple((c, Path(p.target, p.source, tuple(reversed(p.arrows))))
                              for c, p in self.terms))

    def __str__(self) -> str:
        out = []
        for i, (c, p) in enumerate(self.terms):
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            if i == 0:
                out.append(("-" if c < 0 else "") + coef + str(p))
            else:
                out.append(f" {sign} {coef}{p}")
        return "".join(out)


Element = Union[Path, Mapping[Path, Any], Relation]


class BoundAlgebra:
    """A finite-dimensional bound quiver algebra with a path-class basis.

    Build instances with :func:`from_presentation`. Multiplication of basis
    elements is computed on demand and cached.
    """

    def __init__(self, quiver: Quiver, field: FieldSpec, relations: Sequence[Relation],
                 l_max: int, loewy_length: int, basis: Sequence[Path], ideal: Echelon,
                 name: str = "A", truncation: Optional[int] = None):
        self.quiver = quiver
        self.field = field
        self.relations = tuple(relations)
        self.l_max = l_max
        self.loewy_length = loewy_length
        self.basis: Tuple[Path, ...] = tuple(basis)
        self.name = name
        self.truncation = truncation
        self.gluing = None
        self.params: Dict[str, Any] = {}   # named constants of a gallery family
        self._ideal = ideal
        self._index: Dict[Path, int] = {p: i for i, p in enumerate(self.basis)}
        self._products: Dict[Tuple[int, int], Dict[int, Any]] = {}
        self._opposite: Optional["BoundAlgebra"] = None
        self._projectives: Dict[str, "Representation"] = {}
        self._fingerprint: Optional[str] = None

    def __repr__(self) -> str:
        return f"BoundAlgebra({self.name!r}, dim={self.dim}, L={self.loewy_length}, field={self.field.label})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    @property
    def fingerprint(self) -> str:
        if self._fingerprint is None:
            doc = {
                "field": self.field.label,
                "vertices": list(self.quiver.vertices),
                "arrows": [[a.label, a.source, a.target] for a in self.quiver.arrows],
                "relations": [str(r) for r in self.relations],
                "loewy_length": self.loewy_length,
            }
            raw = json.dumps(doc, sort_keys=True).encode("utf-8")
            self._fingerprint = hashlib.sha256(raw).hexdigest()[:16]
        return self._fingerprint

    def basis_index(self, p: Path) -> int:
        return self._index[p]

    def paths_between(self, source: str, target: str) -> List[int]:
        return [i for i, p in enumerate(self.basis) if p.source == source and p.target == target]

    # normal forms

    def _as_dict(self, element: Element) -> Dict[Path, Any]:
        f = self.field
        if isinstance(element, Path):
            items: Iterable = [(element, f.one)]
        elif isinstance(element, Relation):
            items = [(p, c) for c, p in element.terms]
        else:
            items = element.items()
        out: Dict[Path, Any] = {}
        for p, c in items:
            if p.arrows:
                self.quiver.path(p.arrows)
            else:
                self.quiver.trivial(p.source)
            out[p] = f.norm(out.get(p, f.zero) + f.coerce(c))
        return out

    def _reduce(self, element: Mapping[Path, Any]) -> Dict[int, Any]:
        f = self.field
        L = self.loewy_length
        low = {p: c for p, c in element.items() if p.length < L and c}
        out: Dict[int, Any] = {}
        for p, c in self._ideal.reduce(low).items():
            if p.length < L:
                out[self._index[p]] = c
        return out

    def normal_form_sparse(self, element: Element) -> Dict[int, Any]:
        return self._reduce(self._as_dict(element))

    def normal_form(self, element: Element) -> Tuple[Any, ...]:
        """Coefficient vector of ``element`` over :attr:`basis`."""
        f = self.field
        sparse = self.normal_form_sparse(element)
        return tuple(sparse.get(i, f.zero) for i in range(self.dim))

    def is_zero(self, element: Element) -> bool:
        return not self.normal_form_sparse(element)

    # multiplication

    def product(self, i: int, j: int) -> Dict[int, Any]:
        key = (i, j)
        hit = self._products.get(key)
        if hit is None:
            p, q = self.basis[i], self.basis[j]
            if p.target != q.source:
                hit = {}
            else:
                hit = self._reduce({Path(p.source, q.target, p.arrows + q.arrows): self.field.one})
            self._products[key] = hit
        return hit

    def multiply(self, x: Sequence[Any], y: Sequence[Any]) -> Tuple[Any, ...]:
        f = self.field
        acc = [f.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in self.product(i, j).items():
                    acc[k] += a * b * c
        return tuple(f.norm(v) for v in acc)

    def times_arrow(self, i: int, label: str) -> Dict[int, Any]:
        """Normal form of basis[i] followed by the arrow ``label`` (empty when not composable)."""
        p = self.basis[i]
        a = self.quiver.arrow(label)
        if p.target != a.source:
            return {}
        return self._reduce({Path(p.source, a.target, p.arrows + (label,)): self.field.one})

    def structure_constants(self) -> Dict[Tuple[int, int], Dict[int, Any]]:
        for i in range(self.dim):
            for j in range(self.dim):
                self.product(i, j)
        return dict(self._products)

    def ideal_basis(self) -> List[Dict[str, Any]]:
        """Reduced rows of the ideal whose pivot has length below the Loewy length."""
        rows = []
        for piv in self._ideal.pivots:
            if piv.length < self.loewy_length:
                rows.append({str(p): c for p, c in self._ideal.row(piv).items()})
        return rows

    # derived algebras

    def opposite(self) -> "BoundAlgebra":
        if self._opposite is None:
            name = self.name[:-3] if self.name.endswith("^op") else f"{self.name}^op"
            op = from_presentation(self.quiver.opposite(), [r.reversed() for r in self.relations],
                                   self.field, self.l_max, name=name,
                                   truncate_at=self.loewy_length)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def projective(self, v: str) -> "Representation":
        if v not in self._projectives:
            self._projectives[v] = indecomposable_projective(self, v)
        return self._projectives[v]


def _monomial_key(idx: Mapping[str, int]):
    def key(p: Path):
        return (p.length, tuple(-idx[a] for a in p.arrows))
    return key


def from_presentation(q: Quiver, rels: Iterable[Relation], field: FieldSpec = FieldSpec(),
                      l_max: int = DEFAULT_L_MAX, name: str = "A",
                      truncate_at: Optional[int] = None) -> BoundAlgebra:
    """Close ``rels`` to a two-sided ideal and return kQ/I.

    ``truncate_at`` adds J^truncate_at to the ideal; it is how an algebra whose
    relations were given together with a truncation is presented again.
    """
    rels = list(rels)
    idx = {a.label: i for i, a in enumerate(q.arrows)}
    for r in rels:
        for c, p in r.terms:
            q.path(p.arrows)
            if p.length >= l_max:
                raise RelationError(f"relation term {p} has length {p.length} >= L_max={l_max}")
    cap = l_max
    key = _monomial_key(idx)
    ideal = Echelon(field, key=key)
    heap: List[Tuple[int, int, Dict[Path, Any]]] = []
    seq = itertools.count()

    def push(vec: Mapping[Path, Any]):
        vec = {p: c for p, c in vec.items() if p.length <= cap and field.norm(c)}
        if vec:
            heapq.heappush(heap, (min(p.length for p in vec), next(seq), vec))

    for r in rels:
        vec: Dict[Path, Any] = {}
        for c, p in r.terms:
            vec[p] = field.norm(vec.get(p, field.zero) + field.coerce(c))
        if not any(vec.values()):
            raise RelationError(f"relation {r} vanishes over {field.label}")
        push(vec)
    if truncate_at is not None and truncate_at <= cap:
        for p in paths_of_length(q, truncate_at):
            push({p: field.one})

    standard: Dict[int, List[Path]] = {0: [Path(v, v) for v in q.vertices]}
    standard[1] = [Path(a.source, a.target, (a.label,)) for a in q.arrows]
    if not q.arrows:
        loewy = 1
    else:
        d = 2
        while True:
            while heap and heap[0][0] <= d:
                _, _, vec = heapq.heappop(heap)
                piv = ideal.add(vec)
                if piv is None:
                    continue
                row = ideal.row(piv)
                for a in q.arrows:
                    push({Path(p.source, a.target, p.arrows + (a.label,)): c
                          for p, c in row.items() if p.target == a.source})
                    push({Path(a.source, p.target, (a.label,) + p.arrows): c
                          for p, c in row.items() if p.source == a.target})
            layer = [Path(u.source, a.target, u.arrows + (a.label,))
                     for u in standard[d - 1] for a in q.arrows_from(u.target)]
            layer = [p for p in layer if not ideal.is_pivot(p)]
            if not layer:
                loewy = d
                break
            if d >= l_max:
                raise NotAdmissible(l_max)
            standard[d] = sorted(layer, key=q.order_key)
            log.debug("%s: degree %d has %d standard paths", name, d, len(layer))
            d += 1
    basis = [p for n in range(loewy) for p in standard.get(n, [])]
    algebra = BoundAlgebra(q, field, rels, l_max, loewy, basis, ideal, name=name,
                           truncation=truncate_at)
    log.debug("built %r", algebra)
    return algebra


def opposite_algebra(a: BoundAlgebra) -> BoundAlgebra:
    return a.opposite()


# distinguished modules


def indecomposable_projective(a: BoundAlgebra, v: str) -> "Representation":
    """P_v = e_v A: paths starting at v, arrows acting by right composition."""
    from .repmod import make_representation

    a.quiver.vertex_index(v)
    f = a.field
    at: Dict[str, List[int]] = {w: [] for w in a.vertices}
    for i, p in enumerate(a.basis):
        if p.source == v:
            at[p.target].append(i)
    position = {i: k for w in a.vertices for k, i in enumerate(at[w])}
    maps: Dict[str, Matrix] = {}
    for arrow in a.quiver.arrows:
        src, tgt = at[arrow.source], at[arrow.target]
        rows = [[f.zero] * len(src) for _ in tgt]
        for col, i in enumerate(src):
            for j, c in a.times_arrow(i, arrow.label).items():
                rows[position[j]][col] = c
        maps[arrow.label] = Matrix.from_rows(rows, f, len(src))
    return make_representation(a, {w: len(at[w]) for w in a.vertices}, maps)


def simple(a: BoundAlgebra, v: str) -> "Representation":
    from .repmod import make_representation

    a.quiver.vertex_index(v)
    return make_representation(a, {w: int(w == v) for w in a.vertices}, {})


def dual_module(a: BoundAlgebra, M: "Representation") -> "Representation":
    """D M over the opposite algebra: same dimensions, transposed maps."""
    from .repmod import make_representation

    if M.algebra is not a:
        raise AlgebraMismatch(f"module over {M.algebra.name}, expected {a.name}")
    op = a.opposite()
    return make_representation(op, dict(M.dims), {l: m.transpose() for l, m in M.maps.items()})


def injective(a: BoundAlgebra, v: str) -> "Representation":
    """I_v = D(A e_v), built as the dual of the opposite projective."""
    op = a.opposite()
    return dual_module(op, op.projective(v))


def radical_projective(a: BoundAlgebra, v: str) -> "Representation":
    from .repmod import radical

    return radical(a.projective(v)).rep
