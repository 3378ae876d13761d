from __future__ import annotations
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .errors import DanglingEndpoint, DuplicateLabel, InvalidPath, UnknownVertex


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path read left to right: t(arrows[i]) == s(arrows[i+1])."""

    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e_{self.source}"


ArrowSpec = Union[Arrow, Tuple[str, str, str]]


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    _arrow_index: Dict[str, int] = field(default=None, compare=False, repr=False, hash=False)
    _vertex_index: Dict[str, int] = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_vertex_index", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_arrow_index", {a.label: i for i, a in enumerate(self.arrows)})

    def vertex_index(self, v: str) -> int:
        try:
            return self._vertex_index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_index

    def arrow(self, label: str) -> Arrow:
        try:
            return self.arrows[self._arrow_index[label]]
        except KeyError:
            raise InvalidPath(f"unknown arrow {label!r}") from None

    def arrow_index(self, label: str) -> int:
        self.arrow(label)
        return self._arrow_index[label]

    def arrows_from(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def trivial(self, v: str) -> Path:
        self.vertex_index(v)
        return Path(v, v)

    def path(self, labels: Sequence[str]) -> Path:
        if not labels:
            raise InvalidPath("empty arrow sequence; use trivial(v)")
        arrows = [self.arrow(l) for l in labels]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise InvalidPath(f"{a.label}*{b.label}: t({a.label})={a.target} but s({b.label})={b.source}")
        return Path(arrows[0].source, arrows[-1].target, tuple(labels))

    def concat(self, p: Path, q: Path) -> Path:
        """p followed by q; raises InvalidPath when t(p) != s(q)."""
        if p.target != q.source:
            raise InvalidPath(f"cannot compose {p} with {q}")
        return Path(p.source, q.target, p.arrows + q.arrows)

    def order_key(self, p: Path) -> Tuple:
        """The enumeration order: trivial paths by vertex, then length, then arrow order."""
        if p.is_trivial:
            return (0, self.vertex_index(p.source), ())
        return (p.length, 0, tuple(self._arrow_index[a] for a in p.arrows))

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.label, a.target, a.source) for a in self.arrows))

    def reverse_path(self, p: Path) -> Path:
        """The same path read in the opposite quiver."""
        return Path(p.target, p.source, tuple(reversed(p.arrows)))

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for a in self.arrows_from(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        return seen == len(self.vertices)


def build_quiver(vertices: Iterable, arrows: Iterable[ArrowSpec]) -> Quiver:
    verts = tuple(str(v) for v in vertices)
    if len(set(verts)) != len(verts):
        dup = sorted({v for v in verts if verts.count(v) > 1})
        raise DuplicateLabel(f"duplicate vertex label(s): {', '.join(dup)}")
    known = set(verts)
    out: List[Arrow] = []
    labels = set()
    for spec in arrows:
        a = spec if isinstance(spec, Arrow) else Arrow(str(spec[0]), str(spec[1]), str(spec[2]))
        if a.label in labels:
            raise DuplicateLabel(f"duplicate arrow label {a.label!r}")
        for end in (a.source, a.target):
            if end not in known:
                raise DanglingEndpoint(f"arrow {a.label} references undeclared vertex {end!r}")
        labels.add(a.label)
        out.append(a)
    return Quiver(verts, tuple(out))


def paths_of_length(q: Quiver, length: int) -> List[Path]:
    if length == 0:
        return [Path(v, v) for v in q.vertices]
    current = [Path(a.source, a.target, (a.label,)) for a in q.arrows]
    for _ in range(length - 1):
        current = [Path(p.source, a.target, p.arrows + (a.label,))
                   for p in current for a in q.arrows_from(p.target)]
    return sorted(current, key=q.order_key)


def paths_up_to(q: Quiver, L: int) -> List[Path]:
    """All paths of length < L in enumeration order."""
    if L < 1:
        raise ValueError("L must be at least 1")
    out: List[Path] = []
    for n in range(L):
        layer = paths_of_length(q, n)
        if n and not layer:
            break
        out.extend(layer)
    return out
