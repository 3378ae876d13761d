"""
K0, the induced syzygy map and the Igusa-Todorov function.

K0 is the free abelian group on the non-projective indecomposable classes of the
registry; ``omega_bar`` sends a class to the K0 class of its syzygy. For a
finitely generated subgroup G the rank sequence r_n = rank omega_bar^n(G) is
non-increasing, and omega_bar is injective on omega_bar^n(G) exactly when
r_n = r_(n+1). So eta(G) is one more than the last index where the rank drops.

When the classes reachable from G under omega_bar form a finite set S, the
Fitting index of omega_bar on Q^S bounds every drop, which makes the computed
value exact. Otherwise ranks are followed up to a horizon and the value is only
a lower bound.
"""

from __future__ import annotations
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .algebra import BoundAlgebra, radical_projective, simple
from .errors import HorizonExceeded, UnknownClass
from .homology import syzygy, syzygy_chain
from .linalg import Echelon, FieldSpec, nullspace
from .registry import IsoRegistry
from .repmod import Representation

log = logging.getLogger(__name__)

DEFAULT_HORIZON = 10
DEFAULT_CLOSURE_CUTOFF = 200
DEFAULT_SEARCH_BOUND = 3
_Q = FieldSpec()


@dataclass(frozen=True)
class K0Element:
    """Integer combination of non-projective class ids, stored sparse and sorted."""

    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Dict[int, int]) -> "K0Element":
        return cls(tuple(sorted((k, v) for k, v in coeffs.items() if v)))

    @classmethod
    def basis(cls, cid: int) -> "K0Element":
        return cls(((cid, 1),))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "K0Element") -> "K0Element":
        out = self.as_dict()
        for k, v in other.terms:
            out[k] = out.get(k, 0) + v
        return K0Element.from_dict(out)

    def __neg__(self) -> "K0Element":
        return K0Element(tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other: "K0Element") -> "K0Element":
        return self + (-other)

    def __mul__(self, c: int) -> "K0Element":
        return K0Element.from_dict({k: c * v for k, v in self.terms})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.terms:
            coef = "" if v == 1 else "-" if v == -1 else f"{v}"
            parts.append(f"{coef}[#{k}]")
        return " + ".join(parts).replace("+ -", "- ")


def k0_rank(elements: Iterable[K0Element]) -> int:
    ech = Echelon(_Q)
    for x in elements:
        if x.terms:
            ech.add({k: Fraction(v) for k, v in x.terms})
    return ech.rank


@dataclass(frozen=True)
class K0Subgroup:
    generators: Tuple[K0Element, ...]

    @property
    def rank(self) -> int:
        return k0_rank(self.generators)


# classes and the syzygy map


def k0_class(M: Representation, registry: IsoRegistry) -> K0Element:
    """[M]: multiplicities of the non-projective summands of M."""
    out: Dict[int, int] = {}
    for cid in registry.register_summands(M):
        if not cid.projective:
            out[cid.value] = out.get(cid.value, 0) + 1
    return K0Element.from_dict(out)


def omega_class(cid: int, registry: IsoRegistry) -> K0Element:
    cached = registry.syzygy_classes.get(cid)
    if cached is None:
        rep = registry.representative(cid)
        if registry.class_id(cid).projective:
            raise UnknownClass(f"class #{cid} is projective and has no K0 coordinate")
        cached = k0_class(syzygy(rep), registry).as_dict()
        registry.syzygy_classes[cid] = cached
    return K0Element.from_dict(cached)


def omega_bar(x: K0Element, registry: IsoRegistry) -> K0Element:
    out = K0Element()
    for k, v in x.terms:
        out = out + omega_class(k, registry) * v
    return out


def add_generators(modules: Sequence[Representation], registry: IsoRegistry) -> List[K0Element]:
    """Basis classes of <add M> for the sum of ``modules``, in first-seen order."""
    seen: List[int] = []
    for M in modules:
        for k in k0_class(M, registry).support:
            if k not in seen:
                seen.append(k)
    return [K0Element.basis(k) for k in seen]


# closures and the Fitting index


@dataclass(frozen=True)
class SyzygyClosure:
    """Classes reachable under omega_bar; ``finite`` is False when the search was cut off."""

    finite: bool
    classes: Tuple[int, ...]
    cutoff: int


def _class_closure(start: Iterable[int], registry: IsoRegistry, rounds: int,
                   max_classes: int) -> SyzygyClosure:
    classes: List[int] = []
    frontier: List[int] = []
    for k in start:
        if k not in classes:
            classes.append(k)
            frontier.append(k)
    for _ in range(rounds):
        if not frontier:
            return SyzygyClosure(True, tuple(classes), rounds)
        nxt = []
        for k in frontier:
            for c in omega_class(k, registry).support:
                if c not in classes:
                    classes.append(c)
                    nxt.append(c)
                    if len(classes) > max_classes:
                        return SyzygyClosure(False, tuple(classes), rounds)
        frontier = nxt
    return SyzygyClosure(not frontier, tuple(classes), rounds)


def syzygy_finite_subgroup(generators: Sequence[Representation], registry: IsoRegistry,
                           cutoff: int = 8, max_classes: int = DEFAULT_CLOSURE_CUTOFF) -> SyzygyClosure:
    start = [k for M in generators for k in k0_class(M, registry).support]
    closure = _class_closure(start, registry, cutoff, max_classes)
    if not closure.finite:
        log.warning("syzygy closure still growing after %d rounds (%d classes)", cutoff, len(closure.classes))
    return closure


def fitting_index(classes: Sequence[int], registry: IsoRegistry) -> int:
    """Least k with rank omega_bar^k = rank omega_bar^(k+1) on the span of a closed class set."""
    level = [K0Element.basis(c) for c in classes]
    prev = k0_rank(level)
    k = 0
    while True:
        level = [omega_bar(x, registry) for x in level]
        r = k0_rank(level)
        if r == prev:
            return k
        prev = r
        k += 1


# eta and phi


@dataclass(frozen=True)
class PhiReport:
    value: int
    ranks: Tuple[int, ...]
    certified: bool
    horizon: int
    closure_size: Optional[int]


def _levels(gens: Sequence[K0Element], registry: IsoRegistry, depth: int) -> List[List[K0Element]]:
    levels = [list(gens)]
    for _ in range(depth):
        prev = levels[-1]
        if all(x.is_zero() for x in prev):
            levels.append(prev)
        else:
            levels.append([omega_bar(x, registry) for x in prev])
    return levels


def _depth(gens: Sequence[K0Element], registry: IsoRegistry, horizon: int,
           closure_cutoff: int) -> Tuple[int, bool, Optional[int]]:
    support = [k for x in gens for k in x.support]
    closure = _class_closure(support, registry, max(horizon, 1), closure_cutoff)
    if closure.finite:
        return fitting_index(closure.classes, registry) + 1, True, len(closure.classes)
    return horizon, False, None


def _last_drop(ranks: Sequence[int]) -> int:
    drops = [n for n in range(len(ranks) - 1) if ranks[n] > ranks[n + 1]]
    return drops[-1] + 1 if drops else 0


def eta_report(gens: Sequence[K0Element], registry: IsoRegistry, horizon: int = DEFAULT_HORIZON,
               closure_cutoff: int = DEFAULT_CLOSURE_CUTOFF) -> PhiReport:
    gens = [x for x in gens if not x.is_zero()]
    if not gens:
        return PhiReport(0, (0,), True, horizon, 0)
    depth, certified, size = _depth(gens, registry, horizon, closure_cutoff)
    ranks = tuple(k0_rank(level) for level in _levels(gens, registry, depth))
    value = _last_drop(ranks)
    if not certified:
        log.warning("eta is a lower bound: class closure not finite within %d rounds", horizon)
    log.debug("ranks %s -> eta %d (certified=%s)", ranks, value, certified)
    return PhiReport(value, ranks, certified, horizon, size)


def eta(gens: Sequence[K0Element], registry: IsoRegistry, horizon: int = DEFAULT_HORIZON) -> int:
    return eta_report(gens, registry, horizon).value


def phi_report(M: Representation, registry: IsoRegistry, horizon: int = DEFAULT_HORIZON,
               closure_cutoff: int = DEFAULT_CLOSURE_CUTOFF) -> PhiReport:
    return eta_report(add_generators([M], registry), registry, horizon, closure_cutoff)


def phi(M: Representation, registry: IsoRegistry, horizon: int = DEFAULT_HORIZON) -> int:
    return phi_report(M, registry, horizon).value


def phi_lower_bound(suite: Sequence[Representation], registry: IsoRegistry,
                    horizon: int = DEFAULT_HORIZON) -> PhiReport:
    """phi of the direct sum of ``suite``, which bounds phi of every sub-sum from above."""
    if not suite:
        raise ValueError("empty suite")
    return eta_report(add_generators(suite, registry), registry, horizon)


# the kernel characterization


@dataclass(frozen=True)
class CharacterizationReport:
    phi: int
    max_n: int
    witness: Optional[K0Element]
    bound: int
    confirmed: bool


def _integral(vec: Dict[int, Fraction]) -> Dict[int, int]:
    den = 1
    for x in vec.values():
        den = lcm(den, Fraction(x).denominator)
    return {k: int(Fraction(x) * den) for k, x in vec.items()}


def _vanishing_order(v: K0Element, registry: IsoRegistry, depth: int) -> Optional[int]:
    """Least n <= depth with omega_bar^n v = 0."""
    cur = v
    for n in range(depth + 1):
        if cur.is_zero():
            return n
        cur = omega_bar(cur, registry)
    return None


def phi_eta_oracle(M: Representation, registry: IsoRegistry, horizon: int = DEFAULT_HORIZON) -> int:
    """eta as the largest vanishing order of an element of <add M>.

    The kernel of omega_bar^horizon on <add M> is computed once and each of its
    basis vectors is pushed through omega_bar until it dies. No rank sequence
    is involved, so this is an independent check of ``phi``.
    """
    gens = add_generators([M], registry)
    if not gens:
        return 0
    image = list(gens)
    for _ in range(horizon):
        image = [omega_bar(x, registry) for x in image]
    rows: Dict[int, Dict[int, Fraction]] = {}
    for j, x in enumerate(image):
        for cls, c in x.terms:
            rows.setdefault(cls, {})[j] = Fraction(c)
    best = 0
    for vec in nullspace(rows.values(), len(gens), _Q):
        v = K0Element.from_dict({gens[j].support[0]: c for j, c in _integral(vec).items()})
        order = _vanishing_order(v, registry, horizon)
        if order is not None and order > best:
            best = order
    if horizon and best == horizon:
        raise HorizonExceeded(f"an element of <add M> first vanishes at the horizon {horizon}")
    log.debug("oracle: largest vanishing order %d", best)
    return best


def phi_characterization_check(M: Union[Representation, Sequence[Representation]], registry: IsoRegistry,
                               bound: int = DEFAULT_SEARCH_BOUND,
                               horizon: int = DEFAULT_HORIZON) -> CharacterizationReport:
    """Compare phi(M) with max{n : omega_bar^n v = 0 != omega_bar^(n-1) v, v in <add M>}.

    The maximum is read off the growth of the kernels of omega_bar^n on <add M>;
    a witness with coefficients in [-bound, bound] is then searched for. A list
    of modules stands for their direct sum.
    """
    gens = add_generators([M] if isinstance(M, Representation) else list(M), registry)
    report = eta_report(gens, registry, horizon)
    if not gens:
        return CharacterizationReport(report.value, 0, None, bound, report.value == 0)
    depth = len(report.ranks) - 1
    levels = _levels(gens, registry, depth)
    k = len(gens)
    max_n, candidate = 0, None
    prev_dim = 0
    for n in range(1, depth + 1):
        rows: Dict[int, Dict[int, Fraction]] = {}
        for j, x in enumerate(levels[n]):
            for cls, c in x.terms:
                rows.setdefault(cls, {})[j] = Fraction(c)
        kernel = nullspace(rows.values(), k, _Q)
        if len(kernel) > prev_dim:
            max_n = n
            for vec in kernel:
                cand = K0Element.from_dict({gens[j].support[0]: c for j, c in _integral(vec).items()})
                if _vanishing_order(cand, registry, n) == n:
                    candidate = cand
                    break
        prev_dim = len(kernel)

    witness = None
    if max_n:
        if candidate is not None and all(abs(c) <= bound for _, c in candidate.terms):
            witness = candidate
        else:
            for size in (1, 2):
                for idx in itertools.combinations(range(k), size):
                    for coeffs in itertools.product([c for c in range(-bound, bound + 1) if c], repeat=size):
                        v = K0Element.from_dict({gens[j].support[0]: c for j, c in zip(idx, coeffs)})
                        if _vanishing_order(v, registry, max_n) == max_n:
                            witness = v
                            break
                    if witness:
                        break
                if witness:
                    break
    confirmed = max_n == report.value and (max_n == 0 or witness is not None)
    return CharacterizationReport(report.value, max_n, witness, bound, confirmed)


# suites


def default_suite(a: BoundAlgebra, depth: int = 4) -> List[Representation]:
    """Simples, the radicals of the indecomposable projectives, and Omega^k of the simples for k <= depth."""
    suite: List[Representation] = []
    for v in a.vertices:
        suite.append(simple(a, v).named(f"S{v}"))
    for v in a.vertices:
        r = radical_projective(a, v)
        if not r.is_zero():
            suite.append(r.named(f"radP{v}"))
    for v in a.vertices:
        chain = syzygy_chain(simple(a, v), depth, stable=True)
        for k, X in enumerate(chain[1:], start=1):
            if not X.is_zero():
                suite.append(X.named(f"Omega^{k}S{v}"))
    return suite


def phi_dimension_lower_bound(a: BoundAlgebra, registry: IsoRegistry,
                              extra: Sequence[Representation] = (),
                              horizon: int = DEFAULT_HORIZON) -> PhiReport:
    return phi_lower_bound(default_suite(a) + list(extra), registry, horizon)
