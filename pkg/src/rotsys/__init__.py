"""rotsys: combinatorial embeddings as rotation systems.

Face tracing, genus, polyhedrality and duals, embedding comparison up to
mirror, non-polyhedrality certificates for non-canonical embeddings of
3-connected planar graphs, and exhaustive verification of the uniqueness
theorem and its corollaries on small graphs.
"""

from .embedmap import (
    Dart,
    EmbeddedGraph,
    FaceWalk,
    build_embedding,
    genus,
    is_angle,
    mirror,
    next_dart,
    trace_faces,
)
from .polyhedral import (
    BadPair,
    DualGraph,
    IntersectionKind,
    IntersectionTag,
    NonSimpleFace,
    PolyhedralVerdict,
    build_dual,
    check_polyhedral,
    dual_is_simple,
    face_intersection,
    is_simple_face,
)
from .compare import (
    Relation,
    TypeAssignment,
    classify_types,
    equivalent,
    vertex_type,
)
from .witness import (
    CrossingPair,
    MixedEdge,
    ProofAnchor,
    Type2Vertex,
    Witness,
    crossing_at_vertex,
    extract_witness,
    find_proof_anchor,
)
from .graphs import (
    SimpleGraph,
    bowtie_graph,
    complete_graph,
    cube_graph,
    cycle_graph,
    is_three_connected,
    k4_minus_edge,
    octahedron_graph,
    path_graph,
    petersen_graph,
    prism_graph,
    wheel_graph,
)
from .census import (
    DEFAULT_BUDGET,
    CensusReport,
    Claim,
    VerificationResult,
    canonical_key,
    embedding_at_index,
    enumerate_rotations,
    find_planar_embedding,
    genus_census,
    total_rotation_systems,
    verify_cubic_corollary,
    verify_low_connectivity,
    verify_planar_polyhedral,
    verify_whitney,
)
from .formats import parse_graph6, parse_rotation_file, serialize_rotation_file
from . import errors

__all__ = [
    "Dart",
    "EmbeddedGraph",
    "FaceWalk",
    "build_embedding",
    "genus",
    "is_angle",
    "mirror",
    "next_dart",
    "trace_faces",
    "BadPair",
    "DualGraph",
    "IntersectionKind",
    "IntersectionTag",
    "NonSimpleFace",
    "PolyhedralVerdict",
    "build_dual",
    "check_polyhedral",
    "dual_is_simple",
    "face_intersection",
    "is_simple_face",
    "Relation",
    "TypeAssignment",
    "classify_types",
    "equivalent",
    "vertex_type",
    "CrossingPair",
    "MixedEdge",
    "ProofAnchor",
    "Type2Vertex",
    "Witness",
    "crossing_at_vertex",
    "extract_witness",
    "find_proof_anchor",
    "SimpleGraph",
    "bowtie_graph",
    "complete_graph",
    "cube_graph",
    "cycle_graph",
    "is_three_connected",
    "k4_minus_edge",
    "octahedron_graph",
    "path_graph",
    "petersen_graph",
    "prism_graph",
    "wheel_graph",
    "DEFAULT_BUDGET",
    "CensusReport",
    "Claim",
    "VerificationResult",
    "canonical_key",
    "embedding_at_index",
    "enumerate_rotations",
    "find_planar_embedding",
    "genus_census",
    "total_rotation_systems",
    "verify_cubic_corollary",
    "verify_low_connectivity",
    "verify_planar_polyhedral",
    "verify_whitney",
    "parse_graph6",
    "parse_rotation_file",
    "serialize_rotation_file",
    "errors",
]
