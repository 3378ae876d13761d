from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import BoundAlgebra, dual_module, simple
from .decomp import decompose, is_isomorphic
from .linalg import Matrix, Subspace
from .repmod import (Morphism, Representation, Subrep, direct_sum_all, is_projective, radical,
                     zero_representation)

log = logging.getLogger(__name__)

DEFAULT_PD_CUTOFF = 40


@dataclass(frozen=True)
class Finite:
    n: int

    def __str__(self) -> str:
        return str(self.n)


@dataclass(frozen=True)
class Infinite:
    """Omega^i M = Omega^j M != 0 with i < j."""

    i: int
    j: int

    def __str__(self) -> str:
        return "inf"


@dataclass(frozen=True)
class Unknown:
    cutoff: int

    def __str__(self) -> str:
        return f"unknown(>{self.cutoff})"


DimResult = Union[Finite, Infinite, Unknown]


def projective_cover(M: Representation) -> Tuple[Representation, Morphism]:
    """P(M) and the epimorphism P(M) -> M.

    Generators are unit vectors completing rad M at each vertex; the summand P_v
    of a generator x at v maps the path class p to T_p x.
    """
    a = M.algebra
    f = M.field
    rad = radical(M)
    gens: List[Tuple[str, Tuple]] = []
    for v in a.vertices:
        for j in Subspace(rad.space(v), M.dims[v], f).complement():
            x = [f.zero] * M.dims[v]
            x[j] = f.one
            gens.append((v, tuple(x)))
    P = direct_sum_all(a, [a.projective(v) for v, _ in gens])
    comps: Dict[str, Matrix] = {}
    for w in a.vertices:
        cols = []
        for v, x in gens:
            for i in a.paths_between(v, w):
                cols.append(M.path_matrix(a.basis[i]).apply(x))
        comps[w] = Matrix.from_columns(cols, M.dims[w], f)
    return P.named(f"P({M.name})" if M.name else "P"), Morphism(P, M, comps)


def syzygy_subrep(M: Representation) -> Subrep:
    """Omega(M) together with its embedding into P(M)."""
    _, epi = projective_cover(M)
    return epi.kernel()


def syzygy(M: Representation) -> Representation:
    return syzygy_subrep(M).rep


def projective_free_part(M: Representation) -> Representation:
    """M with its projective direct summands removed."""
    if M.is_zero():
        return M
    parts = [X for X in decompose(M) if not is_projective(X)]
    if len(parts) == 1:
        return parts[0]
    return direct_sum_all(M.algebra, parts)


def syzygy_chain(M: Representation, k: int, stable: bool = False) -> List[Representation]:
    """[M, Omega M, ..., Omega^k M].

    Each term is the kernel of a minimal projective cover, so projective
    summands of Omega^i M stay in the chain (over 1 -> 2 the chain of S1 is
    S1, S2, 0). With ``stable`` every term has its projective summands dropped.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    trim = projective_free_part if stable else (lambda X: X)
    chain = [trim(M)]
    for i in range(k):
        prev = chain[-1]
        chain.append(zero_representation(M.algebra) if prev.is_zero() else trim(syzygy(prev)))
        log.debug("Omega^%d has dims %s", i + 1, chain[-1].dimension_vector)
    return chain


def proj_dim(M: Representation, cutoff: int = DEFAULT_PD_CUTOFF) -> DimResult:
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    chain = [projective_free_part(M)]
    for n in range(cutoff + 1):
        cur = chain[n]
        if cur.is_zero():
            return Finite(n)
        for i, earlier in enumerate(chain[:n]):
            if earlier.dims == cur.dims and is_isomorphic(earlier, cur):
                return Infinite(i, n)
        if n < cutoff:
            chain.append(projective_free_part(syzygy(cur)))
    log.warning("projective dimension of %r not settled within %d syzygies", M, cutoff)
    return Unknown(cutoff)


def inj_dim(M: Representation, cutoff: int = DEFAULT_PD_CUTOFF) -> DimResult:
    return proj_dim(dual_module(M.algebra, M), cutoff)


def cosyzygy(M: Representation) -> Representation:
    """Omega^-1 M = D Omega D M, over the same algebra as M."""
    a = M.algebra
    om = syzygy(dual_module(a, M))
    return dual_module(a.opposite(), om)


def global_dimension(a: BoundAlgebra, cutoff: int = DEFAULT_PD_CUTOFF) -> DimResult:
    """Maximum of pd over the simples."""
    best = 0
    pending: Optional[DimResult] = None
    for v in a.vertices:
        r = proj_dim(simple(a, v), cutoff)
        if isinstance(r, Finite):
            best = max(best, r.n)
        elif isinstance(r, Infinite):
            return r
        else:
            pending = r
    return pending or Finite(best)


def findim_lower_bound(suite: Sequence[Representation], cutoff: int = DEFAULT_PD_CUTOFF) -> int:
    """Largest finite projective dimension met in ``suite``."""
    best = 0
    for M in suite:
        r = proj_dim(M, cutoff)
        if isinstance(r, Finite):
            best = max(best, r.n)
    return best
