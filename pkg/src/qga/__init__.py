"""Graded quadratic monomial and gentle algebras: duals, cuts, dg resolutions and surfaces."""

from .classify import (
    AnShape,
    ExistenceVerdict,
    detect_An_shape,
    exceptional_sequence_acyclic,
    g11_equivalences,
    has_full_exceptional_sequence,
    silting_existence,
)
from .constructions import (
    GradedIso,
    check_iterated_cut,
    corner_algebra,
    corner_via_dual,
    cut_via_dual,
    graded_iso,
    idempotent_cut,
    quadratic_dual,
)
from .dg import DgQuiverAlgebra, FormalCombination, build_AJ, check_differential, check_homotopy, is_AJ_finite
from .errors import InfiniteObjectError, ParseError, QGAError, ValidationError
from .homology import ExtTable, ext_table, is_preSMC_simples, is_presilting_projective, is_proper, is_smooth
from .quiver import (
    Arrow,
    GentleReport,
    GradedQuiver,
    Idempotent,
    Path,
    QuadraticMonomialAlgebra,
    enumerate_paths,
    parse_algebra,
    serialize,
    validate_gentle,
)
from .surface import (
    RibbonModel,
    SurfaceInvariants,
    assemble_ribbon,
    cut_invariants,
    surface_invariants,
    to_dot,
    two_out_of_three,
)

__all__ = [name for name in dir() if not name.startswith("_")]
