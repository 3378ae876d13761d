"""
Reader for ``.qa`` documents.

A document is a sequence of declarations::

    # comments run to the end of the line
    params p=2 q=3;

    algebra A over Q(7) {
        vertices 1 2 3;
        arrows a:1->2, b:2->3;
        relations a*b;
        truncate 3          # optional J^3 in the ideal
        lmax 12             # optional admissibility cap
    }

    module S1 over A { dims 1:1; }
    module P1 over A { dims 1:1 2:1; map a = [[1]]; }

    glue C from A and B {
        forward al:1->4;
        backward be:3->2;
        mode extended;
        relations ga1*al0 - q ga1*al0p;
    }

Paths are written left to right with ``*``; a term may carry a scalar prefix
(``2 a*b``, ``1/2 a*b``, ``q a*b`` with ``q`` bound in ``params``).
:func:`parse_source` returns the syntax tree, :func:`parse_document` builds the
algebras, modules and gluings it declares.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple, Union

import lark
from lark import Lark, Token, Transformer, v_args

from ..algebra import DEFAULT_L_MAX, BoundAlgebra, Relation, from_presentation
from ..errors import DslError, InvalidPath, QuiverPhiError, RelationError
from ..linalg import FieldSpec
from ..morita import EQUALITY, GluedAlgebra, GlueSpec, glue
from ..quiver import build_quiver
from ..repmod import Representation, make_representation

log = logging.getLogger(__name__)

GRAMMAR = r"""
document: _item*
_item: params | algebra | module | glue

params: "params" assign+ ";"
assign: NAME "=" [sign] number

algebra: "algebra" NAME "over" field "{" _alg_part* "}"
_alg_part: vertices | arrows | relations | truncate | lmax | ";"
field: FIELD_Q ["(" INT ")"]
vertices: "vertices" vname+
arrows: "arrows" arrow_decl ([","] arrow_decl)*
truncate: "truncate" INT
lmax: "lmax" INT

module: "module" NAME "over" NAME "{" _mod_part* "}"
_mod_part: dims | map | ";"
dims: "dims" dim_entry+
dim_entry: vname ":" INT
map: "map" NAME "=" matrix
matrix: "[" [row ("," row)*] "]"
row: "[" [entry ("," entry)*] "]"
entry: [sign] (number | NAME)

glue: "glue" NAME "from" NAME "and" NAME "{" _glue_part* "}"
_glue_part: forward | backward | mode | relations | ";"
forward: "forward" arrow_decl ([","] arrow_decl)*
backward: "backward" arrow_decl ([","] arrow_decl)*
mode: "mode" NAME

relations: "relations" [relation ("," relation)*]
relation: [sign] term (sign term)*
term: [coef] path
coef: number | NAME
path: NAME ("*" NAME)*

arrow_decl: NAME ":" vname "->" vname
vname: NAME | INT
number: INT ["/" INT]
sign: PLUS | MINUS

FIELD_Q: "Q"
PLUS: "+"
MINUS: "-"
NAME: /[A-Za-z_][A-Za-z0-9_]*/
INT: /[0-9]+/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""


# syntax tree; positions never take part in equality


@dataclass(frozen=True)
class Scalar:
    value: Optional[Fraction]          # literal value, or None for a parameter reference
    ref: Optional[str] = None
    negative: bool = False
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Term:
    arrows: Tuple[str, ...]
    coef: Optional[Scalar] = None
    negative: bool = False
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ArrowDecl:
    label: str
    source: str
    target: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ParamsDecl:
    assignments: Tuple[Tuple[str, Scalar], ...]


@dataclass(frozen=True)
class AlgebraDecl:
    name: str
    field: FieldSpec
    vertices: Tuple[str, ...] = ()
    arrows: Tuple[ArrowDecl, ...] = ()
    relations: Tuple[Tuple[Term, ...], ...] = ()
    truncate: Optional[int] = None
    l_max: Optional[int] = None
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MapDecl:
    arrow: str
    rows: Tuple[Tuple[Scalar, ...], ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    over: str
    dims: Tuple[Tuple[str, int], ...] = ()
    maps: Tuple[MapDecl, ...] = ()
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class GlueDecl:
    name: str
    left: str
    right: str
    forward: Tuple[ArrowDecl, ...] = ()
    backward: Tuple[ArrowDecl, ...] = ()
    mode: str = EQUALITY
    relations: Tuple[Tuple[Term, ...], ...] = ()
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


Declaration = Union[ParamsDecl, AlgebraDecl, ModuleDecl, GlueDecl]


@dataclass(frozen=True)
class SourceDocument:
    declarations: Tuple[Declaration, ...]


# parser


@lru_cache(maxsize=None)
def _parser() -> Lark:
    return Lark(GRAMMAR, start="document", parser="lalr", maybe_placeholders=True)


def _pos(tok: Token) -> Dict[str, int]:
    return {"line": tok.line or 0, "column": tok.column or 0}


class _Sections:
    """Keyword sections of a declaration body, kept in source order."""

    def __init__(self, kind: str, items):
        self.kind = kind
        self.items = items


class _ToAst(Transformer):
    @v_args(inline=True)
    def vname(self, tok):
        return tok

    @v_args(inline=True)
    def sign(self, tok):
        return tok

    @v_args(inline=True)
    def number(self, num, den):
        value = Fraction(int(num), int(den)) if den is not None else Fraction(int(num))
        return value, num

    @v_args(inline=True)
    def coef(self, item):
        if isinstance(item, Token):
            return Scalar(None, str(item), **_pos(item))
        value, tok = item
        return Scalar(value, **_pos(tok))

    def path(self, toks):
        return toks

    @v_args(inline=True)
    def term(self, coef, path):
        return coef, path

    def relation(self, items):
        terms: List[Term] = []
        negative = False
        pending = items[0]
        rest = items[1:]
        if pending is not None:
            negative = pending == "-"
        pairs = [(negative, rest[0])] + [(s == "-", t) for s, t in zip(rest[1::2], rest[2::2])]
        for neg, (coef, path) in pairs:
            terms.append(Term(tuple(str(t) for t in path), coef, neg, **_pos(path[0])))
        return tuple(terms)

    def relations(self, items):
        return _Sections("relations", tuple(r for r in items if r is not None))

    @v_args(inline=True)
    def arrow_decl(self, label, source, target):
        return ArrowDecl(str(label), str(source), str(target), **_pos(label))

    def arrows(self, items):
        return _Sections("arrows", tuple(a for a in items if a is not None))

    def forward(self, items):
        return _Sections("forward", tuple(a for a in items if a is not None))

    def backward(self, items):
        return _Sections("backward", tuple(a for a in items if a is not None))

    def vertices(self, toks):
        return _Sections("vertices", tuple(str(t) for t in toks))

    @v_args(inline=True)
    def truncate(self, tok):
        return _Sections("truncate", int(tok))

    @v_args(inline=True)
    def lmax(self, tok):
        return _Sections("lmax", int(tok))

    @v_args(inline=True)
    def mode(self, tok):
        return _Sections("mode", str(tok))

    @v_args(inline=True)
    def field(self, q, p):
        try:
            return FieldSpec(int(p)) if p is not None else FieldSpec()
        except QuiverPhiError as e:
            raise DslError(str(e), **_pos(p)) from None

    @v_args(inline=True)
    def entry(self, sign, item):
        negative = sign is not None and sign == "-"
        if isinstance(item, Token):
            return Scalar(None, str(item), negative, **_pos(item))
        value, tok = item
        return Scalar(value, None, negative, **_pos(tok))

    def row(self, items):
        return tuple(e for e in items if e is not None)

    def matrix(self, items):
        return tuple(r for r in items if r is not None)

    @v_args(inline=True)
    def map(self, label, matrix):
        return _Sections("map", MapDecl(str(label), matrix, **_pos(label)))

    @v_args(inline=True)
    def dim_entry(self, v, n):
        return str(v), int(n)

    def dims(self, items):
        return _Sections("dims", tuple(items))

    @v_args(inline=True)
    def assign(self, name, sign, value):
        num, tok = value
        return str(name), Scalar(num, None, sign is not None and sign == "-", **_pos(tok))

    def params(self, items):
        return ParamsDecl(tuple(items))

    def algebra(self, items):
        name, fs, *parts = items
        body: Dict[str, object] = {"vertices": (), "arrows": (), "relations": ()}
        for s in parts:
            if s.kind in ("vertices", "arrows", "relations"):
                body[s.kind] = body[s.kind] + s.items
            else:
                body[s.kind] = s.items
        return AlgebraDecl(str(name), fs, body["vertices"], body["arrows"], body["relations"],
                           body.get("truncate"), body.get("lmax"), **_pos(name))

    def module(self, items):
        name, over, *parts = items
        dims: Tuple[Tuple[str, int], ...] = ()
        maps: Tuple[MapDecl, ...] = ()
        for s in parts:
            if s.kind == "dims":
                dims += s.items
            else:
                maps += (s.items,)
        return ModuleDecl(str(name), str(over), dims, maps, **_pos(name))

    def glue(self, items):
        name, left, right, *parts = items
        body: Dict[str, object] = {"forward": (), "backward": (), "relations": (), "mode": EQUALITY}
        for s in parts:
            body[s.kind] = s.items if s.kind == "mode" else body[s.kind] + s.items
        return GlueDecl(str(name), str(left), str(right), body["forward"], body["backward"],
                        body["mode"], body["relations"], **_pos(name))

    def document(self, items):
        return SourceDocument(tuple(items))


def parse_source(text: str) -> SourceDocument:
    """The syntax tree of ``text``; syntax errors become positioned :class:`DslError`."""
    try:
        tree = _parser().parse(text)
    except lark.exceptions.UnexpectedToken as e:
        got = "end of input" if e.token.type == "$END" else repr(str(e.token))
        raise DslError(f"unexpected {got}", e.line, e.column, e.accepts or e.expected) from None
    except lark.exceptions.UnexpectedCharacters as e:
        raise DslError(f"unexpected character {e.char!r}", e.line, e.column, e.allowed) from None
    except lark.exceptions.UnexpectedEOF as e:
        raise DslError("unexpected end of input", e.line, e.column, e.expected) from None
    try:
        return _ToAst().transform(tree)
    except lark.exceptions.VisitError as e:
        if isinstance(e.orig_exc, DslError):
            raise e.orig_exc from None
        raise


# building domain values


@dataclass
class QaDocument:
    """Everything a document declares, by name, in declaration order."""

    params: Dict[str, Fraction] = field(default_factory=dict)
    algebras: Dict[str, BoundAlgebra] = field(default_factory=dict)
    modules: Dict[str, Representation] = field(default_factory=dict)
    gluings: Dict[str, GluedAlgebra] = field(default_factory=dict)

    def algebra(self, name: Optional[str] = None) -> BoundAlgebra:
        if name is None:
            if not self.algebras:
                raise DslError("document declares no algebra")
            return list(self.algebras.values())[-1]
        try:
            return self.algebras[name]
        except KeyError:
            raise DslError(f"unknown algebra {name!r}") from None


def _value(s: Scalar, params: Mapping[str, Fraction]) -> Fraction:
    if s.ref is not None:
        if s.ref not in params:
            raise DslError(f"unbound parameter {s.ref!r}", s.line, s.column)
        v = params[s.ref]
    else:
        v = s.value
    return -v if s.negative else v


def _coefficient(t: Term, params: Mapping[str, Fraction]) -> Fraction:
    c = _value(t.coef, params) if t.coef is not None else Fraction(1)
    return -c if t.negative else c


def _relations(q, terms: Tuple[Tuple[Term, ...], ...], params) -> List[Relation]:
    out = []
    for rel in terms:
        pairs = []
        for t in rel:
            try:
                pairs.append((_coefficient(t, params), q.path(t.arrows)))
            except InvalidPath as e:
                raise DslError(str(e), t.line, t.column) from None
        try:
            out.append(Relation(tuple(pairs)))
        except RelationError as e:
            raise DslError(str(e), rel[0].line, rel[0].column) from None
    return out


def build_algebra(decl: AlgebraDecl, params: Mapping[str, Fraction]) -> BoundAlgebra:
    try:
        q = build_quiver(decl.vertices, [(a.label, a.source, a.target) for a in decl.arrows])
    except QuiverPhiError as e:
        bad = next((a for a in decl.arrows if a.source not in decl.vertices or a.target not in decl.vertices), None)
        where = bad or decl
        raise DslError(str(e), where.line, where.column) from None
    rels = _relations(q, decl.relations, params)
    try:
        return from_presentation(q, rels, decl.field, decl.l_max or DEFAULT_L_MAX, name=decl.name,
                                 truncate_at=decl.truncate)
    except QuiverPhiError as e:
        raise DslError(str(e), decl.line, decl.column) from None


def build_module(decl: ModuleDecl, algebra: BoundAlgebra, params: Mapping[str, Fraction]) -> Representation:
    dims = dict(decl.dims)
    maps = {}
    for m in decl.maps:
        if m.arrow in maps:
            raise DslError(f"map {m.arrow} given twice", m.line, m.column)
        maps[m.arrow] = [[_value(s, params) for s in row] for row in m.rows]
    try:
        return make_representation(algebra, dims, maps, name=decl.name)
    except QuiverPhiError as e:
        where = next((m for m in decl.maps if m.arrow in str(e)), decl)
        raise DslError(str(e), where.line, where.column) from None


def build_glue(decl: GlueDecl, algebras: Mapping[str, BoundAlgebra], params: Mapping[str, Fraction]) -> GluedAlgebra:
    for side in (decl.left, decl.right):
        if side not in algebras:
            raise DslError(f"unknown algebra {side!r}", decl.line, decl.column)
    extra = tuple(tuple((_coefficient(t, params), "*".join(t.arrows)) for t in rel) for rel in decl.relations)
    spec = GlueSpec(algebras[decl.left], algebras[decl.right],
                    forward=tuple((a.label, a.source, a.target) for a in decl.forward),
                    backward=tuple((a.label, a.source, a.target) for a in decl.backward),
                    mode=decl.mode, extra_relations=extra, name=decl.name)
    try:
        return glue(spec)
    except QuiverPhiError as e:
        raise DslError(str(e), decl.line, decl.column) from None


def build_document(src: SourceDocument, known: Optional[Mapping[str, BoundAlgebra]] = None) -> QaDocument:
    doc = QaDocument()
    scope: Dict[str, BoundAlgebra] = dict(known or {})
    for decl in src.declarations:
        if isinstance(decl, ParamsDecl):
            for name, s in decl.assignments:
                doc.params[name] = _value(s, doc.params)
        elif isinstance(decl, AlgebraDecl):
            doc.algebras[decl.name] = scope[decl.name] = build_algebra(decl, doc.params)
        elif isinstance(decl, GlueDecl):
            g = build_glue(decl, scope, doc.params)
            doc.gluings[decl.name] = g
            doc.algebras[decl.name] = scope[decl.name] = g.algebra
        else:
            if decl.over not in scope:
                raise DslError(f"module {decl.name} over unknown algebra {decl.over!r}", decl.line, decl.column)
            doc.modules[decl.name] = build_module(decl, scope[decl.over], doc.params)
    log.debug("document: %d algebras, %d modules, %d gluings",
              len(doc.algebras), len(doc.modules), len(doc.gluings))
    return doc


def parse_document(text: str, known: Optional[Mapping[str, BoundAlgebra]] = None) -> QaDocument:
    return build_document(parse_source(text), known)


def parse_algebra(text: str) -> BoundAlgebra:
    """The last algebra (or gluing) a document declares."""
    return parse_document(text).algebra()


def parse_module(text: str, algebra: BoundAlgebra) -> Representation:
    """A single module declaration, read over ``algebra`` whatever name its header gives."""
    src = parse_source(text)
    mods = [d for d in src.declarations if isinstance(d, ModuleDecl)]
    if len(mods) != 1:
        raise DslError(f"expected exactly one module declaration, found {len(mods)}")
    params: Dict[str, Fraction] = {}
    for d in src.declarations:
        if isinstance(d, ParamsDecl):
            for name, s in d.assignments:
                params[name] = _value(s, params)
    return build_module(mods[0], algebra, params)
