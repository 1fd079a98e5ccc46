"""Dense-amplitude oracle: gate algebra, graph states, and the verification ops."""

from __future__ import annotations

import numpy as np
import pytest

from gselc import graph as gr
from gselc import quadform as qf
from gselc import statevector as sv
from gselc.errors import (
    BadArityError,
    SizeMismatchError,
    TooManyQubitsError,
    VertexRangeError,
)

from conftest import MINUS, ONE, PLUS, ZERO, all_graphs, kron_state, random_graph


def state_of(amps):
    amps = np.asarray(amps, dtype=complex)
    return sv.StateVector(int(np.log2(amps.size)), amps)


def test_plus_state_single_qubit():
    assert np.allclose(sv.plus_state(1).amps, PLUS)
    assert np.allclose(sv.graph_state(gr.new_empty(1)).amps, PLUS)


def test_single_edge_graph_state():
    got = sv.graph_state(gr.from_edges(2, [(0, 1)]))
    assert np.allclose(got.amps, np.array([1, 1, 1, -1]) / 2)


def test_cycle5_graph_state_signs():
    got = sv.graph_state(gr.cycle(5))
    form = qf.from_graph(gr.cycle(5))
    expected = np.array([(-1.0) ** qf.evaluate(form, x) for x in range(32)]) / np.sqrt(32)
    assert np.max(np.abs(got.amps - expected)) < 1e-12


def test_graph_state_amplitudes_match_form_exhaustive():
    # cross-module consistency: CZ-built amplitudes vs the phase polynomial
    for n in range(0, 7):
        for g in all_graphs(n):
            state = sv.graph_state(g)
            form = qf.from_graph(g)
            scale = 2.0 ** (-n / 2)
            expected = np.array([(-1.0) ** qf.evaluate(form, x) for x in range(1 << n)])
            assert np.max(np.abs(state.amps - expected * scale)) < 1e-12


def test_gate_arity_validation():
    with pytest.raises(BadArityError):
        sv.Gate(sv.GateKind.CZ, (1,))
    with pytest.raises(BadArityError):
        sv.Gate(sv.GateKind.H, (0, 1))
    with pytest.raises(BadArityError):
        sv.Gate.cz(2, 2)
    with pytest.raises(VertexRangeError):
        sv.apply_gate(sv.plus_state(2), sv.Gate.h(2))


def test_gate_matrix_identities():
    eye = np.eye(2)
    for kind in (sv.GateKind.H, sv.GateKind.X, sv.GateKind.Z):
        m = sv._MATRICES[kind]
        assert np.max(np.abs(m @ m - eye)) <= 1e-12
    sqx = sv._MATRICES[sv.GateKind.SQRT_MINUS_IX]
    assert np.max(np.abs(sqx @ sqx - (-1j) * sv._MATRICES[sv.GateKind.X])) <= 1e-12
    sqz = sv._MATRICES[sv.GateKind.SQRT_IZ]
    assert np.max(np.abs(sqz @ sqz - 1j * sv._MATRICES[sv.GateKind.Z])) <= 1e-12


def test_cz_involution_on_state():
    rng = np.random.default_rng(41)
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    state = state_of(amps / np.linalg.norm(amps))
    twice = sv.apply_gate(sv.apply_gate(state, sv.Gate.cz(0, 2)), sv.Gate.cz(0, 2))
    assert np.max(np.abs(twice.amps - state.amps)) <= 1e-12


def test_h_and_sqrt_on_basis_states():
    zero = state_of(ZERO)
    assert np.allclose(sv.apply_gate(zero, sv.Gate.h(0)).amps, PLUS)
    twice = sv.apply_gate(sv.apply_gate(zero, sv.Gate.sqrt_minus_ix(0)), sv.Gate.sqrt_minus_ix(0))
    assert np.max(np.abs(twice.amps - (-1j) * ONE)) <= 1e-12


def test_norm_preserved_over_random_circuit():
    rng = np.random.default_rng(43)
    state = sv.plus_state(4)
    single = [sv.GateKind.H, sv.GateKind.X, sv.GateKind.Z, sv.GateKind.SQRT_MINUS_IX, sv.GateKind.SQRT_IZ]
    for _ in range(100):
        if rng.integers(0, 4) == 0:
            a, b = rng.choice(4, size=2, replace=False)
            gate = sv.Gate.cz(int(a), int(b))
        else:
            gate = sv.Gate(single[int(rng.integers(0, len(single)))], (int(rng.integers(0, 4)),))
        state = sv.apply_gate(state, gate)
        assert abs(np.vdot(state.amps, state.amps).real - 1.0) <= 1e-9


def test_equal_exact():
    a = sv.plus_state(1)
    assert sv.equal_exact(a, a, 1e-12)
    minus_a = state_of(-a.amps)
    assert not sv.equal_exact(a, minus_a, 1e-9)  # global phase matters here
    with pytest.raises(SizeMismatchError):
        sv.equal_exact(a, sv.plus_state(2))


def test_equal_up_to_global_phase():
    a = sv.graph_state(gr.cycle(5))
    rotated = state_of(1j * a.amps)
    ok, phase = sv.equal_up_to_global_phase(a, rotated, 1e-12)
    assert ok and abs(phase - (-1j)) <= 1e-12
    ok_rev, phase_rev = sv.equal_up_to_global_phase(rotated, a, 1e-12)
    assert ok_rev and abs(phase_rev - 1j) <= 1e-12
    ok, _ = sv.equal_up_to_global_phase(state_of(ZERO), state_of(ONE), 1e-9)
    assert not ok


def test_qubit_cap_enforced():
    with pytest.raises(TooManyQubitsError):
        sv.plus_state(5, max_qubits=4)
    with pytest.raises(TooManyQubitsError):
        sv.graph_state(gr.path(5), max_qubits=4)
    with pytest.raises(TooManyQubitsError):
        sv.verify_theorem1(gr.path(3), 0, gr.path(3), 0, max_qubits=5)


def test_theorem1_single_vertices():
    rep = sv.verify_theorem1(gr.new_empty(1), 0, gr.new_empty(1), 0)
    assert rep.passed
    assert rep.details["rhs_graph_edges"] == [[0, 1]]


def test_theorem1_joined_stars():
    rep = sv.verify_theorem1(gr.star(4), 0, gr.star(4), 0)
    assert rep.passed
    assert len(rep.details["rhs_graph_edges"]) == 25


def test_theorem1_joined_paths():
    # four-vertex chain split into two halves, cores at the cut
    rep = sv.verify_theorem1(gr.path(2), 1, gr.path(2), 0)
    assert rep.passed
    assert len(rep.details["rhs_graph_edges"]) == 4


def test_theorem1_randomized():
    rng = np.random.default_rng(47)
    for _ in range(50):
        n1, n2 = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        g1, g2 = random_graph(rng, n1), random_graph(rng, n2)
        rep = sv.verify_theorem1(g1, int(rng.integers(0, n1)), g2, int(rng.integers(0, n2)))
        assert rep.passed, rep.details


def test_vertex_lc_isolated():
    rep = sv.verify_vertex_lc(gr.new_empty(2), 0)
    assert rep.passed
    assert rep.details["z_corrections"] == []


def test_vertex_lc_single_edge():
    rep = sv.verify_vertex_lc(gr.from_edges(2, [(0, 1)]), 0)
    assert rep.passed


def test_vertex_lc_star_hub():
    rep = sv.verify_vertex_lc(gr.star(4), 0)
    assert rep.passed
    assert rep.details["z_corrections"] == [1, 2, 3, 4]
    assert gr.local_complement(gr.star(4), 0).edge_count == 10


def test_vertex_lc_exhaustive_small():
    for n in range(1, 6):
        for g in all_graphs(n):
            for a in range(n):
                assert sv.verify_vertex_lc(g, a).passed


def test_stabilizers_fix_graph_states():
    assert sv.verify_stabilizers(gr.new_empty(3)).passed
    rep = sv.verify_stabilizers(gr.cycle(5))
    assert rep.passed and rep.details["generators_checked"] == 5
    rng = np.random.default_rng(53)
    assert sv.verify_stabilizers(random_graph(rng, 6)).passed


def test_stabilizer_negative_control():
    # X alone, without the neighbor Z dressing, must not fix the state
    base = sv.graph_state(gr.path(5))
    got = sv.apply_gate(base, sv.Gate.x(1))
    assert not sv.equal_exact(got, base, 1e-9)


def test_ghz_amplitude_check():
    for leaves in (1, 2, 4):
        rep = sv.ghz_amplitude_check(leaves)
        assert rep.passed, rep.details


def test_star1_graph_state_amplitudes():
    got = sv.graph_state(gr.star(1))
    expected = (kron_state(ZERO, PLUS) + kron_state(ONE, MINUS)) / np.sqrt(2)
    assert np.max(np.abs(got.amps - expected)) < 1e-12


def test_shared_neighborhood_scan_records_outcome():
    rep = sv.scan_theorem1_shared_neighbors(trials=30, seed=0)
    assert rep.passed  # the scan itself always completes
    d = rep.details
    assert d["cases_checked"] == 30
    assert d["equal_exact"] <= d["cases_checked"]
    # triangle: cores share their one neighbor, Hadamards do not reproduce ELC
    tri = gr.cycle(3)
    lhs = sv.apply_gates(sv.graph_state(tri), [sv.Gate.h(0), sv.Gate.h(1)])
    rhs = sv.graph_state(gr.edge_local_complement(tri, 0, 1))
    assert not sv.equal_exact(lhs, rhs, 1e-9)
    ok, _ = sv.equal_up_to_global_phase(lhs, rhs, 1e-9)
    assert not ok


def test_dump_csv_format():
    state = state_of(np.array([1, 1, 1, -1]) / 2)
    lines = sv.dump_csv(state).splitlines()
    assert lines == ["0,0.5,0", "1,0.5,0", "2,0.5,0", "3,-0.5,0"]
    plus = sv.plus_state(1)
    first = sv.dump_csv(plus).splitlines()[0]
    assert first == "0,%.17g,%.17g" % (plus.amps[0].real, plus.amps[0].imag)
    assert float(first.split(",")[1]) == plus.amps[0].real  # %.17g round-trips exactly


def test_state_vector_validation():
    with pytest.raises(SizeMismatchError):
        sv.StateVector(2, np.ones(3, dtype=complex))
    with pytest.raises(ValueError):
        sv.StateVector(1, np.array([1.0, 1.0], dtype=complex))
    state = sv.plus_state(2)
    with pytest.raises(ValueError):
        state.amps[0] = 9.0  # buffer is read-only
