"""Graph states, local and edge local complementation, and logical cluster states.

Layers:

- :mod:`gselc.graph`: simple graphs as GF(2) bit rows with LC/ELC.
- :mod:`gselc.quadform`: Boolean phase polynomials and their update rules.
- :mod:`gselc.statevector`: the exact dense-amplitude oracle.
- :mod:`gselc.encoding`: five-qubit-code logical cluster-state builds.
- :mod:`gselc.cli`: the ``gselc`` command.
"""

from .graph import (
    Graph,
    cycle,
    disjoint_union,
    edge_local_complement,
    elc_via_lcs,
    from_edges,
    from_json,
    is_complete_bipartite,
    local_complement,
    neighborhood,
    new_empty,
    path,
    star,
    to_dot,
    to_json,
    toggle_edge,
)
from .quadform import QuadraticForm, apply_lc_update, elc_final_form, evaluate, from_graph, to_graph
from .report import Report
from .statevector import (
    DEFAULT_MAX_QUBITS,
    Gate,
    GateKind,
    StateVector,
    apply_gate,
    equal_exact,
    equal_up_to_global_phase,
    ghz_amplitude_check,
    graph_state,
    plus_state,
    scan_theorem1_shared_neighbors,
    verify_stabilizers,
    verify_theorem1,
    verify_vertex_lc,
)
from .encoding import (
    CircuitLog,
    LogicalRegister,
    build_chain_core,
    build_cs2_direct,
    build_cs2_elc,
    build_logical_cluster,
    encode_logical,
    ghz_encode,
    pentagon,
    verify_chain_elc_steps,
    verify_cs2_equivalence,
)

__version__ = "0.1.0"
