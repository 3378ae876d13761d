from __future__ import annotations
import re
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple, Union

from ..algebra import DEFAULT_L_MAX, BoundAlgebra, Relation
from ..morita import EQUALITY, EXTENDED, GluedAlgebra
from ..repmod import Representation
from .qa import (AlgebraDecl, ArrowDecl, Declaration, GlueDecl, MapDecl, ModuleDecl, ParamsDecl, Scalar,
                 SourceDocument, Term)

INDENT = "    "


def ident(name: str) -> str:
    """``name`` squeezed into the identifier alphabet of the reader."""
    out = re.sub(r"[^A-Za-z0-9_]+", "_", name).strip("_") or "X"
    return out if not out[0].isdigit() else f"_{out}"


# domain values -> syntax tree


def _scalar(x: Any) -> Scalar:
    x = Fraction(x)
    return Scalar(abs(x), None, x < 0)


def _terms(rel: Relation) -> Tuple[Term, ...]:
    out = []
    for c, p in rel.terms:
        c = Fraction(c)
        coef = None if abs(c) == 1 else Scalar(abs(c))
        out.append(Term(p.arrows, coef, c < 0))
    return tuple(out)


def algebra_decl(a: BoundAlgebra, name: Optional[str] = None) -> AlgebraDecl:
    return AlgebraDecl(
        name=ident(name or a.name),
        field=a.field,
        vertices=a.vertices,
        arrows=tuple(ArrowDecl(x.label, x.source, x.target) for x in a.quiver.arrows),
        relations=tuple(_terms(r) for r in a.relations),
        truncate=a.truncation,
        l_max=None if a.l_max == DEFAULT_L_MAX else a.l_max,
    )


def module_decl(M: Representation, name: Optional[str] = None, over: Optional[str] = None) -> ModuleDecl:
    a = M.algebra
    dims = tuple((v, M.dims[v]) for v in a.vertices if M.dims[v])
    maps = []
    for arrow in a.quiver.arrows:
        m = M.maps[arrow.label]
        if m.rows and m.cols and not m.is_zero():
            maps.append(MapDecl(arrow.label, tuple(tuple(_scalar(x) for x in row) for row in m.to_rows())))
    return ModuleDecl(ident(name or M.name or "M"), ident(over or a.name), dims, tuple(maps))


def glue_decl(g: GluedAlgebra, name: Optional[str] = None) -> GlueDecl:
    if len(g.blocks) != 2 or g.mode not in (EQUALITY, EXTENDED):
        raise ValueError(f"{g.algebra.name} is not a two-block gluing")
    forward = tuple(ArrowDecl(a.label, a.source, a.target) for a in g.connectors if g.side_of(a.source) == 0)
    backward = tuple(ArrowDecl(a.label, a.source, a.target) for a in g.connectors if g.side_of(a.source) == 1)
    return GlueDecl(ident(name or g.algebra.name), ident(g.A.name), ident(g.B.name), forward, backward,
                    g.mode, tuple(_terms(r) for r in g.extra_relations))


def document_for(value: Union[BoundAlgebra, GluedAlgebra, Representation, Sequence[Any]]) -> SourceDocument:
    """Declarations that rebuild ``value``; a glued algebra is written as its blocks plus the glue."""
    values = list(value) if isinstance(value, (list, tuple)) else [value]
    decls: List[Declaration] = []
    seen = set()

    def add_algebra(a: BoundAlgebra):
        if id(a) in seen:
            return
        seen.add(id(a))
        g = a.gluing
        if g is not None and len(g.blocks) == 2 and g.mode in (EQUALITY, EXTENDED):
            for b in g.blocks:
                add_algebra(b)
            decls.append(glue_decl(g))
        else:
            decls.append(algebra_decl(a))

    for v in values:
        if isinstance(v, GluedAlgebra):
            add_algebra(v.algebra)
        elif isinstance(v, BoundAlgebra):
            add_algebra(v)
        elif isinstance(v, Representation):
            add_algebra(v.algebra)
            decls.append(module_decl(v))
        else:
            raise TypeError(f"cannot serialize {type(v).__name__}")
    return SourceDocument(tuple(decls))


# syntax tree -> text


def _fmt_scalar(s: Scalar) -> str:
    if s.ref is not None:
        body = s.ref
    else:
        v = Fraction(s.value)
        body = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return f"-{body}" if s.negative else body


def _fmt_term(t: Term) -> str:
    coef = f"{_fmt_scalar(t.coef)} " if t.coef is not None else ""
    return coef + "*".join(t.arrows)


def _fmt_relation(terms: Sequence[Term]) -> str:
    out = []
    for i, t in enumerate(terms):
        if i == 0:
            out.append(("-" if t.negative else "") + _fmt_term(t))
        else:
            out.append(f" {'-' if t.negative else '+'} {_fmt_term(t)}")
    return "".join(out)


def _fmt_arrows(arrows: Sequence[ArrowDecl]) -> str:
    return ", ".join(f"{a.label}:{a.source}->{a.target}" for a in arrows)


def _fmt_field(decl: AlgebraDecl) -> str:
    return f"Q({decl.field.p})" if decl.field.p else "Q"


def render_declaration(d: Declaration) -> str:
    lines: List[str] = []
    if isinstance(d, ParamsDecl):
        return "params " + " ".join(f"{k}={_fmt_scalar(s)}" for k, s in d.assignments) + ";"
    if isinstance(d, AlgebraDecl):
        lines.append(f"algebra {d.name} over {_fmt_field(d)} {{")
        if d.vertices:
            lines.append(f"{INDENT}vertices {' '.join(d.vertices)};")
        if d.arrows:
            lines.append(f"{INDENT}arrows {_fmt_arrows(d.arrows)};")
        if d.relations:
            lines.append(f"{INDENT}relations {', '.join(_fmt_relation(r) for r in d.relations)};")
        if d.truncate is not None:
            lines.append(f"{INDENT}truncate {d.truncate};")
        if d.l_max is not None:
            lines.append(f"{INDENT}lmax {d.l_max};")
    elif isinstance(d, ModuleDecl):
        lines.append(f"module {d.name} over {d.over} {{")
        if d.dims:
            lines.append(f"{INDENT}dims {' '.join(f'{v}:{n}' for v, n in d.dims)};")
        for m in d.maps:
            rows = ", ".join("[" + ", ".join(_fmt_scalar(s) for s in row) + "]" for row in m.rows)
            lines.append(f"{INDENT}map {m.arrow} = [{rows}];")
    elif isinstance(d, GlueDecl):
        lines.append(f"glue {d.name} from {d.left} and {d.right} {{")
        if d.forward:
            lines.append(f"{INDENT}forward {_fmt_arrows(d.forward)};")
        if d.backward:
            lines.append(f"{INDENT}backward {_fmt_arrows(d.backward)};")
        lines.append(f"{INDENT}mode {d.mode};")
        if d.relations:
            lines.append(f"{INDENT}relations {', '.join(_fmt_relation(r) for r in d.relations)};")
    else:
        raise TypeError(f"cannot render {type(d).__name__}")
    lines.append("}")
    return "\n".join(lines)


def render(doc: SourceDocument) -> str:
    return "\n\n".join(render_declaration(d) for d in doc.declarations) + "\n"


def serialize(value: Any) -> str:
    """Deterministic ``.qa`` text for a syntax tree or a domain value."""
    if isinstance(value, SourceDocument):
        return render(value)
    return render(document_for(value))
