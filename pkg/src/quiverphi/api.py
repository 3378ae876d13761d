"""
quiverphi Python API

Wraps the library operations around one algebra, the way the ``qa`` command
drives them.
"""

from __future__ import annotations
import logging
import os
import random
from typing import List, Optional, Sequence

from .algebra import BoundAlgebra, injective, radical_projective, simple
from .config import RunConfig
from .errors import ConfigError, NoGluing, UnknownClass
from .gallery import (build_bm1_example, build_cpq, build_fix5, cpq_standard_suite, random_module,
                      verify_bm1, verify_cpq_claims, verify_cpq_syzygy_table)
from .homology import DimResult, inj_dim, proj_dim, syzygy_chain
from .igusa import PhiReport, default_suite, phi_lower_bound, phi_report
from .linalg import FieldSpec
from .model import CheckReport, HypothesisReport, combine
from .morita import (GluedAlgebra, check_corollary_3_4, check_hypotheses, verify_claim_2, verify_lemma_3_1,
                     verify_prop_3_5_upper, verify_prop_3_8, verify_remark_3_6, verify_thm_3_3_bound,
                     verify_thm_3_7)
from .parsers.detect import QA, detect_format
from .parsers.qa import QaDocument, parse_document
from .registry import IsoRegistry, load_registry, save_registry
from .repmod import Representation, direct_sum_all

log = logging.getLogger(__name__)

EXAMPLES = ("cpq", "bm1", "fix5")
VERIFIERS = ("prop3.5", "thm3.3", "thm3.7", "lemma3.1", "cor3.4", "prop3.8", "remark3.6", "claim2",
             "cpq", "cpq-claims", "bm1")
LEMMA_RANDOM_MODULES = 20


class QuiverPhi:
    """
    Homological computations over one bound quiver algebra.

    Example:
        >>> qp = QuiverPhi.from_file("fix2.qa")
        >>> qp.phi(qp.module("S1+S2")).value
        1
        >>> QuiverPhi.example("fix5").verify("lemma3.1").status
        'pass'
    """

    def __init__(self, algebra: BoundAlgebra, document: Optional[QaDocument] = None,
                 config: Optional[RunConfig] = None):
        self.algebra = algebra
        self.document = document or QaDocument(algebras={algebra.name: algebra})
        self.config = config or RunConfig()
        self._registry: Optional[IsoRegistry] = None

    # construction

    @classmethod
    def from_text(cls, text: str, name: Optional[str] = None, config: Optional[RunConfig] = None) -> "QuiverPhi":
        doc = parse_document(text)
        return cls(doc.algebra(name), doc, config)

    @classmethod
    def from_file(cls, path: str, name: Optional[str] = None, config: Optional[RunConfig] = None) -> "QuiverPhi":
        if not os.path.exists(path):
            raise ConfigError(f"input file not found: {path}")
        if detect_format(path) != QA:
            raise ConfigError(f"{path} is not a .qa document")
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read(), name, config)

    @classmethod
    def example(cls, which: str, config: Optional[RunConfig] = None) -> "QuiverPhi":
        config = config or RunConfig()
        fs = FieldSpec(config.field)
        if which == "cpq":
            g = build_cpq(config.m, config.p, config.q, fs)
        elif which == "bm1":
            g = build_bm1_example(fs)
        elif which == "fix5":
            g = build_fix5(fs)
        else:
            raise ConfigError(f"unknown example {which!r}; choose from {', '.join(EXAMPLES)}")
        return cls(g.algebra, config=config)

    def opposite(self) -> "QuiverPhi":
        return QuiverPhi(self.algebra.opposite(), config=self.config)

    # state

    @property
    def gluing(self) -> GluedAlgebra:
        if self.algebra.gluing is None:
            raise NoGluing(f"{self.algebra.name} was not built as a gluing")
        return self.algebra.gluing

    @property
    def registry(self) -> IsoRegistry:
        if self._registry is None:
            self._registry = IsoRegistry(self.algebra)
        return self._registry

    def load_registry(self, path: Optional[str] = None) -> IsoRegistry:
        self._registry = load_registry(path or self.config.registry_path, self.algebra)
        return self._registry

    def save_registry(self, path: Optional[str] = None) -> str:
        path = path or self.config.registry_path
        save_registry(self.registry, path)
        return os.path.abspath(path)

    # modules

    def named_module(self, token: str) -> Representation:
        """A module declared in the document, or S<v>, P<v>, I<v>, radP<v> for a vertex v."""
        a = self.algebra
        if token in self.document.modules and self.document.modules[token].algebra is a:
            return self.document.modules[token]
        for prefix, build in (("radP", radical_projective), ("S", simple), ("P", None), ("I", injective)):
            v = token[len(prefix):]
            if token.startswith(prefix) and a.quiver.has_vertex(v):
                X = a.projective(v) if build is None else build(a, v)
                return X.named(token)
        raise UnknownClass(f"no module named {token!r} over {a.name}")

    def module(self, spec: str) -> Representation:
        """``S1+S2``-style sums of named modules."""
        parts = [t.strip() for t in spec.split("+") if t.strip()]
        if not parts:
            raise ConfigError("empty module expression")
        mods = [self.named_module(t) for t in parts]
        return mods[0] if len(mods) == 1 else direct_sum_all(self.algebra, mods).named(spec)

    def suite(self) -> List[Representation]:
        if self.algebra.params and self.algebra.gluing is not None:
            return cpq_standard_suite(self.gluing, self.config.scalars(), self.config.n_max)
        return default_suite(self.algebra)

    # homology

    def syzygies(self, M: Representation, k: int = 1, stable: bool = False) -> List[Representation]:
        return syzygy_chain(M, k, stable)

    def pd(self, M: Representation) -> DimResult:
        return proj_dim(M, self.config.pd_cutoff)

    def id(self, M: Representation) -> DimResult:
        return inj_dim(M, self.config.pd_cutoff)

    def phi(self, M: Representation) -> PhiReport:
        return phi_report(M, self.registry, self.config.horizon, self.config.closure_cutoff)

    def phidim_suite(self, extra: Sequence[Representation] = ()) -> PhiReport:
        return phi_lower_bound(self.suite() + list(extra), self.registry, self.config.horizon)

    # gluings

    def hypotheses(self) -> HypothesisReport:
        return check_hypotheses(self.gluing, self.config.h4_cutoff)

    def _lemma_modules(self) -> List[Representation]:
        a = self.algebra
        rng = random.Random(0)
        mods = [simple(a, v).named(f"S{v}") for v in a.vertices]
        mods += [radical_projective(a, v).named(f"radP{v}") for v in a.vertices]
        mods += [random_module(a, rng).named(f"R{i}") for i in range(LEMMA_RANDOM_MODULES)]
        return [X for X in mods if not X.is_zero()]

    def verify(self, which: str) -> CheckReport:
        cfg = self.config
        g = self.gluing
        if which == "prop3.5":
            return verify_prop_3_5_upper(g, self.suite(), self.registry, horizon=cfg.horizon)
        if which == "thm3.3":
            return verify_thm_3_3_bound(g, self.suite(), self.registry, cutoff=cfg.h4_cutoff, horizon=cfg.horizon)
        if which == "thm3.7":
            return verify_thm_3_7(g, self.suite(), cfg.pd_cutoff, cfg.h4_cutoff)
        if which == "lemma3.1":
            return verify_lemma_3_1(g, self._lemma_modules())
        if which == "cor3.4":
            return check_corollary_3_4(g, cfg.pd_cutoff)
        if which == "prop3.8":
            return verify_prop_3_8(g, cutoff=cfg.pd_cutoff)
        if which == "remark3.6":
            return verify_remark_3_6(g, cfg.h4_cutoff)
        if which == "claim2":
            return verify_claim_2(g)
        if which == "cpq":
            return verify_cpq_syzygy_table(g, cfg.scalars(), cfg.n_max)
        if which == "cpq-claims":
            return verify_cpq_claims(g, cfg.scalars(), cfg.n_max, cfg.horizon, self.registry)
        if which == "bm1":
            return verify_bm1(g)
        raise ConfigError(f"unknown verifier {which!r}; choose from {', '.join(VERIFIERS)}")

    def verify_all(self, names: Sequence[str]) -> CheckReport:
        return combine("+".join(names), [self.verify(n) for n in names])
