"""
Gluing bound quiver algebras along connecting arrows.

Blocks keep their vertex and arrow labels inside the glued algebra C; the
connecting arrows run between different blocks. In the equality presentation
the ideal of C is generated by the block ideals and by every 2-path whose
second arrow is a connector, so a connector followed by a path inside its
target block survives and nothing else new does.

The verifiers below test the structural hypotheses of such a gluing and the
homological bounds they imply, on finite suites of modules. Each returns a
:class:`~quiverphi.model.CheckReport`.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .algebra import BoundAlgebra, Relation, from_presentation, radical_projective, simple
from .decomp import decompose, is_isomorphic
from .errors import GlueError, NoGluing, QuiverPhiError
from .homology import DEFAULT_PD_CUTOFF, Finite, Infinite, findim_lower_bound, global_dimension, proj_dim, syzygy, syzygy_chain
from .igusa import DEFAULT_HORIZON, default_suite, phi_lower_bound, phi_report, syzygy_finite_subgroup
from .linalg import rank
from .model import CheckReport, HypothesisReport
from .quiver import Arrow, ArrowSpec, Path, build_quiver, paths_of_length
from .registry import IsoRegistry
from .repmod import Representation, direct_sum_all, is_projective, is_simple, make_representation, restrict, top

log = logging.getLogger(__name__)

EQUALITY = "equality"
EXTENDED = "extended"
PARTITION = "partition"
OPPOSITE = "opposite"

DEFAULT_ORBIT_CUTOFF = 8

# (coefficient, "x*y*z")
TermSpec = Tuple[Any, str]


@dataclass(frozen=True, eq=False)
class GlueSpec:
    A: BoundAlgebra
    B: BoundAlgebra
    forward: Tuple[ArrowSpec, ...] = ()     # A -> B
    backward: Tuple[ArrowSpec, ...] = ()    # B -> A
    mode: str = EQUALITY
    extra_relations: Tuple[Tuple[TermSpec, ...], ...] = ()
    name: str = "C"


@dataclass(eq=False)
class GluedAlgebra:
    algebra: BoundAlgebra
    blocks: Tuple[BoundAlgebra, ...]
    vertex_block: Dict[str, int]
    connectors: Tuple[Arrow, ...]
    connector_classes: int
    mode: str = EQUALITY
    extra_relations: Tuple[Relation, ...] = ()

    def block(self, side: Union[str, int]) -> BoundAlgebra:
        if isinstance(side, int):
            if 0 <= side < len(self.blocks):
                return self.blocks[side]
        else:
            for b in self.blocks:
                if b.name == side:
                    return b
            if side.upper() in ("A", "B") and len(self.blocks) == 2:
                return self.blocks["AB".index(side.upper())]
        raise NoGluing(f"{self.algebra.name} has no block {side!r}")

    @property
    def A(self) -> BoundAlgebra:
        return self.blocks[0]

    @property
    def B(self) -> BoundAlgebra:
        return self.blocks[1]

    @property
    def connector_labels(self) -> Tuple[str, ...]:
        return tuple(a.label for a in self.connectors)

    def side_of(self, v: str) -> int:
        try:
            return self.vertex_block[v]
        except KeyError:
            raise NoGluing(f"vertex {v!r} lies in no block") from None

    def support_block(self, M: Representation) -> Optional[int]:
        """The block containing the support of M, or None when M meets several (or none)."""
        sides = {self.side_of(v) for v in M.algebra.vertices if M.dims[v]}
        return sides.pop() if len(sides) == 1 else None

    def opposite(self) -> "GluedAlgebra":
        """The same partition of C^op, with reversed connectors over the opposite blocks."""
        op = self.algebra.opposite()
        if op.gluing is None:
            blocks = tuple(b.opposite() for b in self.blocks)
            connectors = tuple(Arrow(a.label, a.target, a.source) for a in self.connectors)
            _attach(op, blocks, self.vertex_block, connectors, OPPOSITE)
        return op.gluing


def _connector_classes(blocks: Sequence[BoundAlgebra], vertex_block: Dict[str, int],
                       connectors: Sequence[Arrow]) -> int:
    """Connector followed by a basis path of its target block, summed over connectors."""
    total = 0
    for a in connectors:
        target = blocks[vertex_block[a.target]]
        total += sum(1 for p in target.basis if p.source == a.target)
    return total


def _attach(C: BoundAlgebra, blocks: Sequence[BoundAlgebra], vertex_block: Dict[str, int],
            connectors: Sequence[Arrow], mode: str) -> GluedAlgebra:
    g = GluedAlgebra(C, tuple(blocks), dict(vertex_block), tuple(connectors),
                     _connector_classes(blocks, vertex_block, connectors), mode)
    C.gluing = g
    return g


def _relation_from_terms(q, terms: Sequence[TermSpec]) -> Relation:
    return Relation(tuple((c, q.path(word.split("*"))) for c, word in terms))


def glue_multi(blocks: Sequence[BoundAlgebra], connectors: Sequence[ArrowSpec], mode: str = EQUALITY,
               extra_relations: Sequence[Sequence[TermSpec]] = (), l_max: Optional[int] = None,
               name: str = "C") -> GluedAlgebra:
    if not blocks:
        raise GlueError("nothing to glue")
    if mode not in (EQUALITY, EXTENDED):
        raise GlueError(f"unknown gluing mode {mode!r}")
    if mode == EQUALITY and extra_relations:
        raise GlueError("extra relations need the extended mode")
    field = blocks[0].field
    names = [b.name for b in blocks]
    if len(set(names)) != len(names):
        raise GlueError(f"duplicate block names {names}")
    vertex_block: Dict[str, int] = {}
    labels: Dict[str, str] = {}
    for i, b in enumerate(blocks):
        if b.field != field:
            raise GlueError(f"block {b.name} is over {b.field.label}, expected {field.label}")
        for v in b.vertices:
            if v in vertex_block:
                raise GlueError(f"vertex {v!r} occurs in blocks {blocks[vertex_block[v]].name} and {b.name}")
            vertex_block[v] = i
        for a in b.quiver.arrows:
            if a.label in labels:
                raise GlueError(f"arrow {a.label!r} occurs in {labels[a.label]} and {b.name}")
            labels[a.label] = b.name

    links: List[Arrow] = []
    for spec in connectors:
        a = spec if isinstance(spec, Arrow) else Arrow(str(spec[0]), str(spec[1]), str(spec[2]))
        if a.label in labels:
            raise GlueError(f"connector {a.label!r} reuses the label of an arrow in {labels[a.label]}")
        for end in (a.source, a.target):
            if end not in vertex_block:
                raise GlueError(f"connector {a.label} references unknown vertex {end!r}")
        if vertex_block[a.source] == vertex_block[a.target]:
            raise GlueError(f"connector {a.label} stays inside block {blocks[vertex_block[a.source]].name}")
        labels[a.label] = "connectors"
        links.append(a)

    q = build_quiver([v for b in blocks for v in b.vertices],
                     [a for b in blocks for a in b.quiver.arrows] + links)
    rels: List[Relation] = []
    for b in blocks:
        rels.extend(b.relations)
        if b.truncation is not None:
            rels.extend(Relation.monomial(p) for p in paths_of_length(b.quiver, b.truncation))
    for d in links:
        for x in q.arrows_into(d.source):
            rels.append(Relation.monomial(Path(x.source, d.target, (x.label, d.label))))
    link_labels = {a.label for a in links}
    extras: List[Relation] = []
    for terms in extra_relations:
        rel = _relation_from_terms(q, terms)
        for _, p in rel.terms:
            if not link_labels.intersection(p.arrows):
                raise GlueError(f"extra relation {rel} has a term {p} avoiding every connector")
        extras.append(rel)
    rels.extend(extras)

    C = from_presentation(q, rels, field, l_max or max(b.l_max for b in blocks), name=name)
    g = _attach(C, blocks, vertex_block, links, mode)
    g.extra_relations = tuple(extras)
    expected = sum(b.dim for b in blocks) + g.connector_classes
    if mode == EQUALITY and C.dim != expected:
        raise GlueError(f"dim {name} = {C.dim}, expected {expected} from the blocks and connectors")
    log.info("glued %s from %s with %d connectors: dim %d", name, ", ".join(names), len(links), C.dim)
    return g


def glue(spec: GlueSpec, l_max: Optional[int] = None) -> GluedAlgebra:
    A, B = spec.A, spec.B
    for direction, arrows, src, tgt in (("forward", spec.forward, A, B), ("backward", spec.backward, B, A)):
        for a in arrows:
            a = a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2]))
            if not src.quiver.has_vertex(a.source) or not tgt.quiver.has_vertex(a.target):
                raise GlueError(f"{direction} connector {a.label} must run from {src.name} to {tgt.name}")
    return glue_multi([A, B], tuple(spec.forward) + tuple(spec.backward), spec.mode,
                      spec.extra_relations, l_max, spec.name)


def glue_from_partition(C: BoundAlgebra, groups: Sequence[Sequence[str]],
                        names: Optional[Sequence[str]] = None) -> GluedAlgebra:
    """Read an existing algebra as a gluing of the full subquivers on ``groups``.

    A block keeps the relations of C whose paths stay inside it and the
    truncation of C, if any.
    """
    names = list(names or ["A", "B", "D", "E", "F"][:len(groups)])
    if len(names) != len(groups):
        raise GlueError("one name per vertex group is required")
    vertex_block: Dict[str, int] = {}
    for i, group in enumerate(groups):
        for v in group:
            C.quiver.vertex_index(v)
            if v in vertex_block:
                raise GlueError(f"vertex {v!r} is in two groups")
            vertex_block[v] = i
    missing = [v for v in C.vertices if v not in vertex_block]
    if missing:
        raise GlueError(f"vertices {missing} are in no group")
    blocks = []
    for i, group in enumerate(groups):
        inside = [a for a in C.quiver.arrows if vertex_block[a.source] == i == vertex_block[a.target]]
        labels = {a.label for a in inside}
        rels = [r for r in C.relations if all(set(p.arrows) <= labels for _, p in r.terms)]
        q = build_quiver([v for v in C.vertices if vertex_block[v] == i], inside)
        blocks.append(from_presentation(q, rels, C.field, C.l_max, name=names[i],
                                        truncate_at=C.truncation))
    connectors = [a for a in C.quiver.arrows if vertex_block[a.source] != vertex_block[a.target]]
    return _attach(C, blocks, vertex_block, connectors, PARTITION)


# module helpers


def lift(g: GluedAlgebra, X: Representation) -> Representation:
    """A block module as a C-module; connectors act by zero."""
    if not any(X.algebra is b for b in g.blocks):
        raise NoGluing(f"{X!r} is not over a block of {g.algebra.name}")
    return make_representation(g.algebra, dict(X.dims), dict(X.maps), name=X.name)


def block_semisimple(g: GluedAlgebra, i: int) -> Representation:
    """The sum of the simple C-modules at the vertices of block i."""
    C = g.algebra
    return direct_sum_all(C, [simple(C, v) for v in g.blocks[i].vertices])


def block_parts(g: GluedAlgebra, M: Representation) -> Tuple[Dict[int, List[Representation]], List[Representation]]:
    """Indecomposable summands of M grouped by the block holding their support, plus the rest."""
    parts: Dict[int, List[Representation]] = {i: [] for i in range(len(g.blocks))}
    mixed: List[Representation] = []
    for X in decompose(M):
        i = g.support_block(X)
        if i is None:
            mixed.append(X)
        else:
            parts[i].append(X)
    return parts, mixed


def _sum(g: GluedAlgebra, modules: Sequence[Representation]) -> Representation:
    return direct_sum_all(g.algebra, modules)


def _name(M: Representation) -> str:
    return M.name or f"dims {M.dimension_vector}"


# hypotheses


def structural_hypotheses(g: GluedAlgebra) -> Tuple[Dict[str, bool], Dict[str, List[str]]]:
    """H1-H3: vertex and arrow partitions, and the containment of the gluing ideal."""
    C = g.algebra
    bad: Dict[str, List[str]] = {"H1": [], "H2": [], "H3": []}

    seen: Dict[str, int] = {}
    for i, b in enumerate(g.blocks):
        for v in b.vertices:
            if v in seen:
                bad["H1"].append(f"{v} in blocks {seen[v]} and {i}")
            seen[v] = i
    if set(seen) != set(C.vertices):
        bad["H1"].extend(sorted(set(seen) ^ set(C.vertices)))

    links = set(g.connector_labels)
    for a in C.quiver.arrows:
        s, t = g.vertex_block.get(a.source), g.vertex_block.get(a.target)
        if s is None or t is None:
            bad["H2"].append(a.label)
        elif s == t:
            inner = g.blocks[s].quiver
            if a.label in links or a.label not in {x.label for x in inner.arrows} \
                    or inner.arrow(a.label) != a:
                bad["H2"].append(a.label)
        elif a.label not in links:
            bad["H2"].append(a.label)
    for b in g.blocks:
        for a in b.quiver.arrows:
            if a.label not in {x.label for x in C.quiver.arrows}:
                bad["H2"].append(f"{b.name}:{a.label}")

    if not bad["H2"]:
        for b in g.blocks:
            for r in b.relations:
                if not C.is_zero(r):
                    bad["H3"].append(str(r))
            if b.truncation is not None:
                for p in paths_of_length(b.quiver, b.truncation):
                    if p.length < C.loewy_length and not C.is_zero(p):
                        bad["H3"].append(str(p))
        for d in g.connectors:
            for x in C.quiver.arrows_into(d.source):
                p = Path(x.source, d.target, (x.label, d.label))
                if not C.is_zero(p):
                    bad["H3"].append(str(p))
    else:
        bad["H3"].append("arrow partition invalid")
    flags = {k: not v for k, v in bad.items()}
    return flags, {k: v for k, v in bad.items() if v}


def orbit_sources(g: GluedAlgebra) -> Dict[int, Representation]:
    """Pi_i(Omega_C(sum of the simples outside block i)) for every block i."""
    out: Dict[int, Representation] = {}
    C = g.algebra
    for i in range(len(g.blocks)):
        others = [simple(C, v) for v in C.vertices if g.side_of(v) != i]
        om = syzygy(direct_sum_all(C, others))
        out[i] = restrict(om, i)
    return out


def orbit_modules(g: GluedAlgebra, cutoff: int = DEFAULT_ORBIT_CUTOFF) -> Dict[int, List[Representation]]:
    """The block syzygy orbits of :func:`orbit_sources`, truncated after ``cutoff`` steps."""
    out: Dict[int, List[Representation]] = {}
    for i, X in orbit_sources(g).items():
        out[i] = [Y for Y in syzygy_chain(X, cutoff, stable=True) if not Y.is_zero()]
    return out


def check_hypotheses(g: GluedAlgebra, cutoff: int = DEFAULT_ORBIT_CUTOFF,
                     registries: Optional[Dict[int, IsoRegistry]] = None) -> HypothesisReport:
    flags, bad = structural_hypotheses(g)
    registries = registries if registries is not None else {}
    h4 = "holds"
    try:
        for i, X in orbit_sources(g).items():
            reg = registries.setdefault(i, IsoRegistry(g.blocks[i]))
            closure = syzygy_finite_subgroup([X], reg, cutoff)
            if not closure.finite:
                h4 = "unknown"
                bad.setdefault("H4", []).append(f"{g.blocks[i].name}: closure open after {cutoff} rounds")
            else:
                log.debug("H4 on %s: %d syzygy classes", g.blocks[i].name, len(closure.classes))
    except QuiverPhiError as e:
        h4 = "unknown"
        bad.setdefault("H4", []).append(str(e))
    report = HypothesisReport(h1=flags["H1"], h2=flags["H2"], h3=flags["H3"], h4=h4, witnesses=bad)
    log.info("hypotheses on %s: H1=%s H2=%s H3=%s H4=%s", g.algebra.name, report.h1, report.h2,
             report.h3, report.h4)
    return report


def _needs_structure(g: GluedAlgebra, check: str) -> Optional[CheckReport]:
    flags, bad = structural_hypotheses(g)
    if all(flags.values()):
        return None
    failed = [k for k, ok in flags.items() if not ok]
    return CheckReport(check=check, status="unknown",
                       details=[f"{', '.join(failed)} do not hold; the statement does not apply"],
                       witnesses=[w for k in failed for w in bad[k]])


# verifiers


def verify_lemma_3_1(g: GluedAlgebra, modules: Sequence[Representation]) -> CheckReport:
    """Omega_C(M) splits into summands over single blocks; for one-sided M the
    parts off its block agree with those of Omega_C(top M)."""
    pre = _needs_structure(g, "lemma3.1")
    if pre:
        return pre
    details, witnesses = [], []
    for M in modules:
        parts, mixed = block_parts(g, syzygy(M))
        for X in mixed:
            witnesses.append(f"{_name(M)}: summand with dims {X.dimension_vector} meets several blocks")
        side = g.support_block(M)
        if side is not None and not mixed:
            top_parts, _ = block_parts(g, syzygy(top(M)))
            for j in parts:
                if j != side and not is_isomorphic(_sum(g, parts[j]), _sum(g, top_parts[j])):
                    witnesses.append(f"{_name(M)}: block {g.blocks[j].name} part differs from that of the top")
        sizes = ", ".join(f"{g.blocks[j].name}:{len(xs)}" for j, xs in parts.items())
        details.append(f"{_name(M)}: summands per block {sizes}")
    status = "fail" if witnesses else "pass"
    return CheckReport(check="lemma3.1", status=status, details=details, witnesses=witnesses)


def verify_one_sided_syzygy(g: GluedAlgebra, M: Representation) -> CheckReport:
    """Omega_C(M) = Omega_A(M) + (projective over the other blocks) for M over a single block A."""
    side = g.support_block(M)
    if side is None:
        return CheckReport(check="one-sided-syzygy", status="unknown",
                           details=[f"{_name(M)} is not supported on a single block"])
    witnesses = []
    parts, mixed = block_parts(g, syzygy(M))
    if mixed:
        witnesses.append(f"{_name(M)}: {len(mixed)} summands meet several blocks")
    expected = lift(g, syzygy(restrict(M, side)))
    if not is_isomorphic(_sum(g, parts[side]), expected):
        witnesses.append(f"{_name(M)}: the {g.blocks[side].name} part is not the block syzygy")
    for j, xs in parts.items():
        if j == side:
            continue
        for X in xs:
            if not is_projective(restrict(X, j)):
                witnesses.append(f"{_name(M)}: non-projective summand {X.dimension_vector} over {g.blocks[j].name}")
    return CheckReport(check="one-sided-syzygy", status="fail" if witnesses else "pass",
                       details=[f"{_name(M)} over block {g.blocks[side].name}"], witnesses=witnesses)


def block_phidims(g: GluedAlgebra, cutoff: int = DEFAULT_PD_CUTOFF) -> List[Optional[int]]:
    """phidim of each block where it is known: the global dimension when that is finite."""
    out: List[Optional[int]] = []
    for b in g.blocks:
        r = global_dimension(b, cutoff)
        out.append(r.n if isinstance(r, Finite) else None)
    return out


def verify_prop_3_5_upper(g: GluedAlgebra, suite: Sequence[Representation], registry: IsoRegistry,
                          phidims: Optional[Sequence[Optional[int]]] = None,
                          horizon: int = DEFAULT_HORIZON) -> CheckReport:
    """phi(X) <= max phidim(block) + |Q0| + 1 on the suite (equality gluings and their opposites)."""
    check = "prop3.5"
    if g.mode not in (EQUALITY, OPPOSITE):
        return CheckReport(check=check, status="unknown",
                           details=[f"needs an equality gluing, got mode {g.mode}"])
    phidims = list(phidims) if phidims is not None else block_phidims(g)
    known = None not in phidims
    m = max(d for d in phidims if d is not None) if any(d is not None for d in phidims) else 0
    bound = m + sum(len(b.vertices) for b in g.blocks) + 1
    details = [f"block phidims {phidims}", f"bound {bound}" + ("" if known else " (block phidims incomplete)")]
    witnesses = []
    for X in suite:
        r = phi_report(X, registry, horizon)
        details.append(f"phi({_name(X)}) = {r.value}{'' if r.certified else '+'}")
        if r.value > bound:
            witnesses.append(f"{_name(X)}: phi {r.value} > {bound}")
    lower = phi_lower_bound(suite, registry, horizon).value if suite else 0
    details.append(f"suite lower bound on phidim {g.algebra.name}: {lower}; max block phidim {m}")
    if witnesses and known:
        status = "fail"
    elif not known or witnesses:
        status = "unknown"
    else:
        status = "pass"
    return CheckReport(check=check, status=status, details=details, witnesses=witnesses)


def _lifted_orbits(g: GluedAlgebra, cutoff: int) -> List[Representation]:
    return [lift(g, Y) for ys in orbit_modules(g, cutoff).values() for Y in ys]


def verify_thm_3_3_bound(g: GluedAlgebra, suite: Sequence[Representation], registry: IsoRegistry,
                         phidims: Optional[Sequence[Optional[int]]] = None,
                         cutoff: int = DEFAULT_ORBIT_CUTOFF, horizon: int = DEFAULT_HORIZON) -> CheckReport:
    """phi(X) <= eta(O) + max phidim(block) + 1, with O spanned by the lifted block orbits."""
    check = "thm3.3"
    phidims = list(phidims) if phidims is not None else block_phidims(g)
    orbit = _lifted_orbits(g, cutoff)
    eta_o = phi_lower_bound(orbit, registry, horizon) if orbit else None
    eta_value = eta_o.value if eta_o else 0
    exact = (eta_o is None or eta_o.certified) and None not in phidims
    m = max((d for d in phidims if d is not None), default=0)
    bound = eta_value + m + 1
    details = [f"eta(O) = {eta_value} over {len(orbit)} orbit modules", f"block phidims {phidims}", f"bound {bound}"]
    witnesses = []
    for X in suite:
        r = phi_report(X, registry, horizon)
        if r.value > bound:
            witnesses.append(f"{_name(X)}: phi {r.value} > {bound}")
    status = "pass" if not witnesses and exact else "fail" if witnesses and exact else "unknown"
    return CheckReport(check=check, status=status, details=details, witnesses=witnesses)


def verify_thm_3_7(g: GluedAlgebra, suite: Sequence[Representation], cutoff: int = DEFAULT_PD_CUTOFF,
                   orbit_cutoff: int = DEFAULT_ORBIT_CUTOFF) -> CheckReport:
    """pd_C(X) <= k + 1 + f for finite pds, k the block findims and f the findim over O."""
    check = "thm3.7"
    k = max(findim_lower_bound(default_suite(b), cutoff) for b in g.blocks)
    f = findim_lower_bound(_lifted_orbits(g, orbit_cutoff), cutoff)
    bound = k + 1 + f
    details = [f"block findim (suite) {k}", f"findim over O {f}", f"bound {bound}"]
    witnesses = []
    unknown = False
    for X in suite:
        r = proj_dim(X, cutoff)
        if isinstance(r, Finite):
            if r.n > bound:
                witnesses.append(f"{_name(X)}: pd {r.n} > {bound}")
        elif isinstance(r, Infinite):
            details.append(f"{_name(X)}: infinite pd, excluded")
        else:
            unknown = True
            details.append(f"{_name(X)}: pd {r}")
    status = "fail" if witnesses else "unknown" if unknown else "pass"
    return CheckReport(check=check, status=status, details=details, witnesses=witnesses)


def check_corollary_3_4(g: GluedAlgebra, cutoff: int = DEFAULT_PD_CUTOFF) -> CheckReport:
    """For every vertex v, the part of Omega_C(S_v) off the block of v has finite pd over its block."""
    C = g.algebra
    details, witnesses = [], []
    unknown = False
    for v in C.vertices:
        side = g.side_of(v)
        parts, mixed = block_parts(g, syzygy(simple(C, v)))
        if mixed:
            witnesses.append(f"S{v}: syzygy meets several blocks")
        for j, xs in parts.items():
            if j == side or not xs:
                continue
            r = proj_dim(restrict(_sum(g, xs), j), cutoff)
            details.append(f"S{v}: pd over {g.blocks[j].name} of the off-block part = {r}")
            if isinstance(r, Infinite):
                witnesses.append(f"S{v}: off-block part has infinite pd over {g.blocks[j].name}")
            elif not isinstance(r, Finite):
                unknown = True
    status = "fail" if witnesses else "unknown" if unknown else "pass"
    return CheckReport(check="cor3.4", status=status, details=details, witnesses=witnesses)


def verify_prop_3_8(g: GluedAlgebra, suite: Optional[Sequence[Representation]] = None,
                    cutoff: int = DEFAULT_PD_CUTOFF) -> CheckReport:
    """Over C^op: finite pds of syzygies stay below the suite findims of the blocks and simples, plus one."""
    op = g.opposite()
    Cop = op.algebra
    suite = list(suite) if suite is not None else default_suite(Cop)
    simples = [simple(Cop, v) for v in Cop.vertices]
    bound = max([findim_lower_bound(default_suite(b), cutoff) for b in op.blocks]
                + [findim_lower_bound(simples, cutoff)]) + 1
    details, witnesses = [f"bound {bound}"], []
    for X in suite:
        r = proj_dim(syzygy(X), cutoff)
        if isinstance(r, Finite) and r.n > bound:
            witnesses.append(f"Omega({_name(X)}): pd {r.n} > {bound}")
    return CheckReport(check="prop3.8", status="fail" if witnesses else "pass",
                       details=details, witnesses=witnesses)


def _simples_and_radicals(a: BoundAlgebra) -> List[Representation]:
    out = [simple(a, v) for v in a.vertices]
    out += [r for r in (radical_projective(a, v) for v in a.vertices) if not r.is_zero()]
    return out


def verify_remark_3_6(g: GluedAlgebra, cutoff: int = DEFAULT_ORBIT_CUTOFF) -> CheckReport:
    """Blocks with a finite syzygy closure give a glued algebra with one."""
    details = []
    for b in g.blocks:
        closure = syzygy_finite_subgroup(_simples_and_radicals(b), IsoRegistry(b), cutoff)
        details.append(f"{b.name}: {'finite' if closure.finite else 'open'} with {len(closure.classes)} classes")
        if not closure.finite:
            return CheckReport(check="remark3.6", status="unknown", details=details)
    C = g.algebra
    closure = syzygy_finite_subgroup(_simples_and_radicals(C), IsoRegistry(C), cutoff)
    details.append(f"{C.name}: {'finite' if closure.finite else 'open'} with {len(closure.classes)} classes")
    return CheckReport(check="remark3.6", status="pass" if closure.finite else "fail", details=details)


def verify_claim_2(g: GluedAlgebra, suite: Optional[Sequence[Representation]] = None) -> CheckReport:
    """Over C^op, connectors leaving the top block of an indecomposable non-simple syzygy act injectively."""
    op = g.opposite()
    Cop = op.algebra
    suite = list(suite) if suite is not None else _simples_and_radicals(Cop)
    details, witnesses = [], []
    checked = 0
    for X in suite:
        for Z in decompose(syzygy(X)):
            if is_simple(Z):
                continue
            side = op.support_block(top(Z))
            if side is None:
                witnesses.append(f"Omega({_name(X)}): summand {Z.dimension_vector} has its top over several blocks")
                continue
            for d in op.connectors:
                if op.side_of(d.source) != side:
                    continue
                T = Z.maps[d.label]
                checked += 1
                if T.cols and rank(T) < T.cols:
                    witnesses.append(f"Omega({_name(X)}): {d.label} is not injective on {Z.dimension_vector}")
    details.append(f"{checked} connector maps checked")
    return CheckReport(check="claim2", status="fail" if witnesses else "pass", details=details,
                       witnesses=witnesses)
