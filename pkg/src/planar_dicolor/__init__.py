"""List-dicoloring of planar digraphs, discharging and configuration matching."""

from .configs import Configuration, Match, brute_contains, contains, load_catalog, shipped_catalog, verify_match
from .digraph import Digraph, MonoCycle, digirth, is_acyclic_set, uniform_lists, validate_coloring
from .discharge import (
    ChargeLedger,
    ChargeState,
    apply_rstar,
    apply_rules,
    final_report,
    initial_charges,
    verify_conservation,
)
from .embedding import PlanarEmbedding, build_embedding, classify_triangle, face_sizes, from_drawing
from .errors import CapExceeded, ColoringError, DicolorError, EmbeddingError, FormatError, GenerationError
from .gen import GenSpec, golden, random_planar_digraph, random_plane_graph
from .pdg import format_pdg, parse_pdg, read_pdg, write_pdg
from .solver import (
    SolveOutcome,
    Status,
    brute_force,
    check_extension,
    dichromatic_number,
    max_acyclic_set,
    reduce_and_color,
    shortcut_check,
    solve,
    triangle_color_profile,
)

__version__ = "0.1.0"
