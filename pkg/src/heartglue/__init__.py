"""Perversity functions, upper sets of Z x Z, and gluing of slicings.

The main entry points are re-exported here; see the submodules for the rest.
"""

from .model import (
    BigradedObject,
    Cut,
    HNTower,
    OracleModel,
    QuiverModel,
    QuiverObject,
    SemisimpleModel,
    Tower,
    reorder_tower,
    verify_t_structure,
)
from .perversity import MINUS_INF, PLUS_INF, Comparison, Perversity, enumerate_perversities
from .sequences import INF, NEG_INF, QuasiPeriodic, Tail
from .slicing import (
    BaricTable,
    BeilinsonSoule,
    CoherentSupportHeart,
    HeartTable,
    KoszulHeart,
    SemisimpleHeart,
    SupportObject,
    TStructureDescriptor,
    implication_check,
    is_f_compatible,
    is_gluable,
    is_grading,
    is_perverse,
    psi,
    pushforward_support,
)
from .upperset import (
    UpperSet2D,
    is_kinky,
    perversity_to_upperset,
    perversity_to_upperset_op,
    phi_transform,
    upperset_to_perversity,
    upperset_to_perversity_phi,
)
from .zposet import Z, ZHAT, DomainError, LexProduct, Verdict, ZSetMap, alpha, beta, exchange, g_p, gamma_p

__version__ = "0.1.0"
