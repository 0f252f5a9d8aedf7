"""radialnet: radial structure analysis of large sparse graphs.

Per-vertex centrality and robustness metrics plotted against average
distance, compared against degree-preserving rewired null models and a
preferential-attachment generative model.  Built for AS-level Internet
topologies but applicable to any simple undirected graph.
"""

from ._backend import BACKEND
from .generators import BaSpec, DegreeHistogram, ba_generate, degree_histogram
from .graph import (EdgeSet, EmptyEdgeSetError, Graph, build_graph,
                    degree_sequence, largest_component)
from .ingest import (ParseError, SourceReport, merge_sources, parse_as_paths,
                     parse_edge_list, write_edge_list, write_graph_edge_list)
from .nullmodel import RewireConfig, RewireResult, rewire, sample_ensemble
from .profiles import (RadialHistogram, RadialProfile, aggregate_realizations,
                       radial_histogram, radial_profile)
from .radial import (DEFAULT_TIER1, DisconnectedGraphError, TriangleCensus,
                     VertexMetrics, average_distances, clustering,
                     compute_metrics, deletion_impact, distance_balance,
                     distance_stats, eccentricities, neighbor_degree,
                     tier1_summary, triangle_census)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BaSpec",
    "DEFAULT_TIER1",
    "DegreeHistogram",
    "DisconnectedGraphError",
    "EdgeSet",
    "EmptyEdgeSetError",
    "Graph",
    "ParseError",
    "RadialHistogram",
    "RadialProfile",
    "RewireConfig",
    "RewireResult",
    "SourceReport",
    "TriangleCensus",
    "VertexMetrics",
    "aggregate_realizations",
    "average_distances",
    "ba_generate",
    "build_graph",
    "clustering",
    "compute_metrics",
    "degree_histogram",
    "degree_sequence",
    "deletion_impact",
    "distance_balance",
    "distance_stats",
    "eccentricities",
    "largest_component",
    "merge_sources",
    "neighbor_degree",
    "parse_as_paths",
    "parse_edge_list",
    "radial_histogram",
    "radial_profile",
    "rewire",
    "sample_ensemble",
    "tier1_summary",
    "triangle_census",
    "write_edge_list",
    "write_graph_edge_list",
]
