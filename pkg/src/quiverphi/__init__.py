__version__ = "0.3.0"

from .algebra import BoundAlgebra, Relation, from_presentation
from .api import QuiverPhi
from .homology import inj_dim, proj_dim, syzygy
from .igusa import phi, phi_lower_bound
from .quiver import build_quiver

__all__ = [
    "BoundAlgebra",
    "QuiverPhi",
    "Relation",
    "build_quiver",
    "from_presentation",
    "inj_dim",
    "phi",
    "phi_lower_bound",
    "proj_dim",
    "syzygy",
]
