from .exceptions import (
    BudgetExceeded,
    GraphError,
    GraphFormatError,
    ProtocolLimitationWarning,
    SimulationError,
    UnsupportedError,
)
from .graph import (
    BlockDecomposition,
    Graph,
    InterBlockPath,
    VertexSplitSpec,
    blocks_by_component,
    complete_graph,
    contract_edge,
    from_edge_list,
    has_clique_minor,
    is_k_connected,
    reference_blocks,
    split_vertex,
)
from .patterns import TreeEmbedding, TreePattern, enumerate_embeddings, is_valid_embedding, pattern_graph
from .families import (
    ChordSpec,
    FamilySpec,
    all_families,
    build_family,
    canonical_g3,
    chorded_cycle_family,
    cycle_family,
    erdos_posa_family,
    h_chain,
    lemma_cover,
    path_family,
)
from .cycles import CycleWitness, longest_cycle
from .oracle import (
    Budget,
    CoverSolution,
    PackingSolution,
    ValidationReport,
    max_packing,
    min_cover,
    validate_solution,
)
from .simulation import RoutingTable, SimState, independent_path_count, run_block_detection, step_round
from .heuristics import find_g3_units, find_k4_subgraphs, pack_t1, pack_t2
from .graphio import dump_solution, load_graph, load_solution, save_graph
