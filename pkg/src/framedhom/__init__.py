"""Exact homological action of framed surfaces.

Winding-number functions on a marked surface, their Arf invariants, the
change-of-winding crossed homomorphism on the pure automorphism group of
relative homology, and membership in its kernel, which is the homological
monodromy group of the corresponding stratum of abelian differentials.
"""

from .errors import (
    ArfMismatch,
    DimensionMismatch,
    FramedHomError,
    GenusTooLarge,
    InvalidSurface,
    MissingArcData,
    MoveError,
    NoLiftExists,
    NotPrimitive,
    NotSymplectic,
    PointPushOnArcs,
    QVectorMismatch,
    SomeKappaOdd,
    SpecMismatch,
    TooLarge,
)
from .framing import Framing, QForm, QVector, arf, arf_of_form, q_vector, spin_form, winding_parity
from .kernel import StructureReport, kernel_test, lift_transvection, structure_report
from .lattice import (
    AbsVec,
    CohomClass,
    PunctVec,
    RelVec,
    SurfaceSpec,
    ZeroChain,
    abs_basis,
    arc_class,
    as_punct,
    as_rel,
    boundary,
    point_class,
    point_loop,
    project_punct,
    rel_punct_pairing,
    symplectic_pairing,
    x_curve,
    y_curve,
)
from .moves import ArcParityTwist, BoundaryTwist, ConnectSum, apply_move, match_framings
from .paut import PAutElem, compose, decompose, factor_sp, invert, pullback_h1, transvection
from .theta import q_hat, theta, v_kappa_star
from .words import (
    PointPush,
    Twist,
    Word,
    act_framing,
    act_rel,
    delta_word,
    standard_alphabet,
    track_curve,
    word_to_paut,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
