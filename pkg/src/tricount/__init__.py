"""Triangle counting library: cover-edge, forward and edge-iterator
algorithm families, shared-memory parallel variants, a benchmark
harness, and a distributed communication-volume simulator."""

from .graph import (
    EdgeList,
    Graph,
    ParseError,
    degree_order,
    load_edge_list,
    load_graph,
    normalize,
    parse_edge_list,
    save_graph,
    to_edge_list,
    wedge_count,
)
from .rmat import RmatParams, generate_rmat
from .bfs import (
    BfsLabeling,
    CoverEdgeSet,
    EdgeClass,
    bfs_label,
    cover_edges,
    enumerate_triangles,
    verify_cover,
)
from .sequential import (
    COVER_RATIO_THRESHOLD,
    SEQUENTIAL_IDS,
    count_sequential,
    edge_intersection_sum,
    tc_cetc,
    tc_cetc_degree,
    tc_cetc_fe,
    tc_cetc_split,
    tc_cetc_split_degree,
    tc_cetc_split_recursive,
    tc_edge_binary,
    tc_edge_binary_do,
    tc_edge_hash,
    tc_edge_hash_do,
    tc_edge_merge,
    tc_edge_merge_do,
    tc_edge_partition,
    tc_edge_partition_do,
    tc_forward,
    tc_forward_hashed,
    tc_forward_hashed_degree,
    tc_linear_algebra,
    tc_treelist,
    tc_tri_simple,
    tc_triples,
    tc_wedge,
    tc_wedge_do,
)
from .parallel import PARALLEL_IDS, ParallelConfig, tc_cetc_sm, tc_par
from .dmsim import (
    CommReport,
    DmSimResult,
    Partition,
    ScalingFit,
    Shipment,
    ceil_log2,
    comm_report,
    comm_volume_breakdown,
    comm_volume_cetc_dm,
    comm_volume_previous,
    fit_scaling,
    format_volume,
    partition_graph,
    projected_comm_volume,
    reports_to_csv,
    simulate_cetc_dm,
)
from .bench import (
    ALGORITHM_GROUPS,
    BenchError,
    BenchRecord,
    RunSpec,
    emit_csv,
    expand_algorithms,
    reference_count,
    resolve_graph,
    run_bench,
)

__version__ = "0.1.0"
