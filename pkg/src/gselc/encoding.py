"""Five-qubit-code logical cluster states built two ways: direct logical CZs
versus the Hadamard-pair (edge local complementation) shortcut.

A logical block is five physical qubits, core first. Encoding a block is the
GHZ-type fan-out (H, four CZs from the core, H) followed by the pentagon of
five CZs. The direct construction entangles encoded blocks with 25 inter-block
CZs each; the shortcut seeds one physical CZ between cores before encoding and
lets the Hadamards inside the encoders do the rest.

Every build appends to a CircuitLog so gate-count claims are audited against
the exact states the oracle produces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import graph as gr
from .errors import OddChainError, VertexRangeError
from .graph import Graph
from .report import Report
from .statevector import (
    DEFAULT_MAX_QUBITS,
    Gate,
    GateKind,
    StateVector,
    amp_distance,
    apply_gate,
    graph_state,
    plus_state,
)

__all__ = [
    "LogicalRegister",
    "LoggedGate",
    "CircuitLog",
    "ghz_encode",
    "pentagon",
    "encode_logical",
    "build_cs2_direct",
    "build_cs2_elc",
    "verify_cs2_equivalence",
    "build_chain_core",
    "verify_chain_elc_steps",
    "build_logical_cluster",
    "construction_summary",
]

BLOCK_SIZE = 5


@dataclass(frozen=True)
class LogicalRegister:
    """One code block: the core qubit plus its four ancillae."""

    core: int
    ancillae: tuple[int, int, int, int]

    def __post_init__(self):
        if len({self.core, *self.ancillae}) != BLOCK_SIZE:
            raise VertexRangeError(f"register indices must be distinct: {self}")

    @classmethod
    def block(cls, j: int) -> LogicalRegister:
        """Register j in the standard layout: indices [5j, 5j+4], core first."""
        base = BLOCK_SIZE * j
        return cls(base, (base + 1, base + 2, base + 3, base + 4))

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.core, *self.ancillae)


@dataclass(frozen=True)
class LoggedGate:
    gate: Gate
    tag: str | None = None
    # Hadamard recorded at a position where the pair provably acts as identity
    positional: bool = False


class CircuitLog:
    """Append-only gate record with CZ and Hadamard accounting."""

    def __init__(self):
        self._entries: list[LoggedGate] = []

    @property
    def entries(self) -> tuple[LoggedGate, ...]:
        return tuple(self._entries)

    def append(self, gate: Gate, tag: str | None = None, positional: bool = False) -> None:
        self._entries.append(LoggedGate(gate, tag, positional))

    def count_cz(self, tag: str | None = None) -> int:
        return sum(
            1
            for e in self._entries
            if e.gate.kind is GateKind.CZ and (tag is None or e.tag == tag)
        )

    @property
    def cz_count(self) -> int:
        return self.count_cz()

    @property
    def hadamard_count(self) -> int:
        """Effective Hadamards; identity-position pairs are excluded."""
        return sum(
            1
            for e in self._entries
            if e.gate.kind is GateKind.H and not e.positional
        )

    @property
    def positional_hadamard_count(self) -> int:
        return sum(
            1 for e in self._entries if e.gate.kind is GateKind.H and e.positional
        )

    def replay(self, sv: StateVector, entries=None) -> StateVector:
        """Apply the logged gates (all of them, or a given subset) to a state."""
        for entry in self._entries if entries is None else entries:
            sv = apply_gate(sv, entry.gate)
        return sv


def ghz_encode(
    sv: StateVector,
    reg: LogicalRegister,
    log: CircuitLog,
    first_h_positional: bool = False,
) -> tuple[StateVector, CircuitLog]:
    """Classical (repetition) encoding of a block: H, core-to-ancilla CZs, H.

    On a core in |0> with ancillae in |+>^4 this produces the five-qubit GHZ
    state. ``first_h_positional`` marks the leading Hadamard as an
    identity-position gate for the count bookkeeping.
    """
    sv = _logged(sv, log, Gate.h(reg.core), positional=first_h_positional)
    for anc in reg.ancillae:
        sv = _logged(sv, log, Gate.cz(reg.core, anc), tag="ghz")
    sv = _logged(sv, log, Gate.h(reg.core))
    return sv, log


def pentagon(
    sv: StateVector, reg: LogicalRegister, log: CircuitLog
) -> tuple[StateVector, CircuitLog]:
    """The five-CZ cycle over the block, the quantum half of the encoding."""
    q = reg.qubits
    for i in range(BLOCK_SIZE):
        sv = _logged(sv, log, Gate.cz(q[i], q[(i + 1) % BLOCK_SIZE]), tag="pentagon")
    return sv, log


def encode_logical(
    sv: StateVector,
    reg: LogicalRegister,
    log: CircuitLog,
    first_h_positional: bool = False,
) -> tuple[StateVector, CircuitLog]:
    """Full block encoder: GHZ fan-out then pentagon (9 CZ, 2 H per block)."""
    sv, log = ghz_encode(sv, reg, log, first_h_positional)
    return pentagon(sv, reg, log)


def _logged(
    sv: StateVector,
    log: CircuitLog,
    gate: Gate,
    tag: str | None = None,
    positional: bool = False,
) -> StateVector:
    log.append(gate, tag, positional)
    return apply_gate(sv, gate)


def _logical_cz(
    sv: StateVector, reg_a: LogicalRegister, reg_b: LogicalRegister, log: CircuitLog
) -> StateVector:
    """Logical CZ between two encoded blocks: all 25 inter-block physical CZs.

    This is the unique pattern consistent with conjugating the single
    core-core CZ by both block encoders, so the direct and shortcut builds
    target the same operator.
    """
    for qa in reg_a.qubits:
        for qb in reg_b.qubits:
            sv = _logged(sv, log, Gate.cz(qa, qb), tag="logical_cz")
    return sv


def _check_chain_length(n_logical: int) -> None:
    if n_logical < 2 or n_logical % 2:
        raise OddChainError(
            f"logical chains must have an even length of at least 2, got {n_logical}"
        )


def _build_direct(
    n_logical: int, max_qubits: int
) -> tuple[StateVector, CircuitLog]:
    """Reference build: encode every block, then one logical CZ per chain edge.

    On the all-plus input the GHZ fan-out stage acts as identity, so only the
    pentagons and the 25-CZ logical gates are applied (and counted).
    """
    regs = [LogicalRegister.block(j) for j in range(n_logical)]
    sv = plus_state(BLOCK_SIZE * n_logical, max_qubits)
    log = CircuitLog()
    for reg in regs:
        sv, log = pentagon(sv, reg, log)
    for j in range(n_logical - 1):
        sv = _logical_cz(sv, regs[j], regs[j + 1], log)
    return sv, log


def _build_elc(n_logical: int, max_qubits: int) -> tuple[StateVector, CircuitLog]:
    """Shortcut build: physical core chain first, then the block encoders.

    Gate order per the encoders: first Hadamard set on the cores, GHZ-type
    CZs, second Hadamard set, pentagons. For a 2-chain the first Hadamard pair
    leaves the seeded two-qubit cluster state invariant and is logged as
    identity-position; longer chains permute the core graph with it.
    """
    regs = [LogicalRegister.block(j) for j in range(n_logical)]
    sv = plus_state(BLOCK_SIZE * n_logical, max_qubits)
    log = CircuitLog()
    for j in range(n_logical - 1):
        sv = _logged(sv, log, Gate.cz(regs[j].core, regs[j + 1].core), tag="core")
    first_pair_invariant = n_logical == 2
    for reg in regs:
        sv = _logged(sv, log, Gate.h(reg.core), positional=first_pair_invariant)
    for reg in regs:
        for anc in reg.ancillae:
            sv = _logged(sv, log, Gate.cz(reg.core, anc), tag="ghz")
    for reg in regs:
        sv = _logged(sv, log, Gate.h(reg.core))
    for reg in regs:
        sv, log = pentagon(sv, reg, log)
    return sv, log


def build_cs2_direct(max_qubits: int = DEFAULT_MAX_QUBITS) -> tuple[StateVector, CircuitLog]:
    """Two-block logical cluster state the expensive way (35 CZs)."""
    return _build_direct(2, max_qubits)


def build_cs2_elc(max_qubits: int = DEFAULT_MAX_QUBITS) -> tuple[StateVector, CircuitLog]:
    """Two-block logical cluster state via one seed CZ and Hadamards (19 CZs)."""
    return _build_elc(2, max_qubits)


def verify_cs2_equivalence(
    tol: float = 1e-9, max_qubits: int = DEFAULT_MAX_QUBITS
) -> Report:
    """Direct and shortcut two-block builds must agree amplitude for amplitude."""
    direct_sv, direct_log = build_cs2_direct(max_qubits)
    elc_sv, elc_log = build_cs2_elc(max_qubits)
    diff = amp_distance(direct_sv, elc_sv)
    return Report(
        passed=diff <= tol,
        details={
            "n_logical": 2,
            "direct": construction_summary("direct", 2, direct_log, diff <= tol, diff),
            "elc": construction_summary("elc", 2, elc_log, diff <= tol, diff),
            "logical_cz_count": direct_log.count_cz("logical_cz"),
            "cz_saving": direct_log.cz_count - elc_log.cz_count,
            "max_amp_diff": diff,
            "tol": tol,
        },
    )


def build_chain_core(n_logical: int) -> tuple[Graph, CircuitLog]:
    """The bare core chain: a path graph on the cores and the CZs that make it."""
    _check_chain_length(n_logical)
    g = gr.path(n_logical)
    log = CircuitLog()
    for a, b in g.edges():
        log.append(Gate.cz(a, b), tag="core")
    return g, log


def verify_chain_elc_steps(
    n_logical: int, tol: float = 1e-9, max_qubits: int = DEFAULT_MAX_QUBITS
) -> Report:
    """Sweep Hadamard pairs left to right over the core chain, checking each step.

    Each pair lands on an edge whose endpoint neighborhoods are disjoint, so
    the state after the pair must equal the graph state of the edge-locally-
    complemented graph, exactly. Step graphs are recorded for inspection.
    """
    chain, _ = build_chain_core(n_logical)
    sv = graph_state(chain, max_qubits)
    g = chain
    steps = []
    worst = 0.0
    for k in range(0, n_logical - 1, 2):
        sv = apply_gate(apply_gate(sv, Gate.h(k)), Gate.h(k + 1))
        g = gr.edge_local_complement(g, k, k + 1)
        diff = amp_distance(sv, graph_state(g, max_qubits))
        worst = max(worst, diff)
        steps.append(
            {
                "edge": [k, k + 1],
                "graph_edges": [list(e) for e in g.edges()],
                "max_amp_diff": diff,
            }
        )
    return Report(
        passed=worst <= tol,
        details={"n_logical": n_logical, "steps": steps, "max_amp_diff": worst, "tol": tol},
    )


def build_logical_cluster(
    n_logical: int, max_qubits: int = DEFAULT_MAX_QUBITS
) -> tuple[StateVector, CircuitLog, Report]:
    """Full even-length logical cluster state, shortcut build, checked against direct.

    Returns the shortcut state and log plus a report comparing it to the
    reference construction (encode all blocks, then 25-CZ logical gates).
    """
    _check_chain_length(n_logical)
    elc_sv, elc_log = _build_elc(n_logical, max_qubits)
    direct_sv, direct_log = _build_direct(n_logical, max_qubits)
    diff = amp_distance(direct_sv, elc_sv)
    tol = 1e-9
    report = Report(
        passed=diff <= tol,
        details={
            "n_logical": n_logical,
            "n_qubits": BLOCK_SIZE * n_logical,
            "direct": construction_summary(
                "direct", n_logical, direct_log, diff <= tol, diff
            ),
            "elc": construction_summary("elc", n_logical, elc_log, diff <= tol, diff),
            "max_amp_diff": diff,
            "tol": tol,
        },
    )
    return elc_sv, elc_log, report


def construction_summary(
    construction: str,
    n_logical: int,
    log: CircuitLog,
    equal_to_reference: bool,
    max_amp_diff: float,
) -> dict:
    """The CLI-facing per-construction record."""
    return {
        "construction": construction,
        "n_logical": n_logical,
        "cz_count": log.cz_count,
        "hadamard_count": log.hadamard_count,
        "equal_to_reference": bool(equal_to_reference),
        "max_amp_diff": float(max_amp_diff),
    }
