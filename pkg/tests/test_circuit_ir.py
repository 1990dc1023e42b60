"""Circuit representation, structural ops, and exact resource metrics."""

import numpy as np
import pytest

from conftest import random_classical_circuit, ref_simulate
from ecadd.circuit_ir import (
    CNOT,
    H,
    NOT,
    S,
    S_DAGGER,
    T,
    T_DAGGER,
    TOFFOLI,
    TOFFOLI_DECOMP_COUNTS,
    TOFFOLI_TEMPLATE,
    Circuit,
    CircuitError,
    compose,
    decompose_toffoli,
    inverse,
    metrics,
)
from ecadd.revsim import Simulator


def three_wire(*names):
    c = Circuit()
    for nm in names:
        c.add_wire(nm)
    return c


class TestCircuitBuilding:
    def test_wires(self):
        c = three_wire("a", "b")
        assert c.width == 2
        assert c.wire_id("b") == 1
        with pytest.raises(CircuitError):
            c.add_wire("a")
        with pytest.raises(CircuitError):
            c.wire_id("zz")

    def test_append_validation(self):
        c = three_wire("a", "b", "c")
        with pytest.raises(CircuitError):
            c.append(99, 0)
        with pytest.raises(CircuitError):
            c.append(CNOT, 0)  # wrong arity
        with pytest.raises(CircuitError):
            c.append(NOT, 5)  # out of range
        with pytest.raises(CircuitError):
            c.append(CNOT, 1, 1)  # duplicate wires
        c.append(TOFFOLI, 0, 1, 2)
        assert c.num_gates == 1
        g = c.gate(0)
        assert g.name == "toffoli" and g.wires == (0, 1, 2)

    def test_groups(self):
        c = three_wire("a", "b")
        with c.group("outer"):
            c.append(NOT, 0)
            with c.group("inner"):
                c.append(CNOT, 0, 1)
        c.check_closed()
        tops = c.top_level_groups()
        assert [g.label for g in tops] == ["outer"]
        assert (tops[0].start, tops[0].end) == (0, 2)
        inner = [g for g in c.groups if g.label == "inner"][0]
        assert inner.depth_level == 1

    def test_unclosed_group_detected(self):
        c = three_wire("a")
        c.begin_group("g")
        with pytest.raises(CircuitError):
            c.check_closed()
        with pytest.raises(CircuitError):
            three_wire("a").end_group()


class TestMetrics:
    def test_counts_and_depth(self):
        c = three_wire("a", "b", "c")
        c.append(NOT, 0)
        c.append(CNOT, 0, 1)
        c.append(CNOT, 0, 2)
        c.append(TOFFOLI, 0, 1, 2)
        r = metrics(c)
        assert r.counts["not"] == 1
        assert r.cnot_count == 2
        assert r.toffoli_count == 1
        assert r.total_gates == 4
        assert r.width == 3
        assert r.depth == 4  # all gates chained through wire 0
        assert r.t_depth == 0 and r.t_count == 0

    def test_parallel_gates_share_a_level(self):
        c = three_wire("a", "b", "c", "d")
        c.append(CNOT, 0, 1)
        c.append(CNOT, 2, 3)
        assert metrics(c).depth == 1

    def test_t_depth_counts_only_t_stages(self):
        c = three_wire("a")
        for kind in (T, H, T_DAGGER, S, T):
            c.append(kind, 0)
        r = metrics(c)
        assert r.t_count == 3
        assert r.t_depth == 3
        assert r.depth == 5

    def test_group_metrics(self):
        c = three_wire("a", "b")
        with c.group("blk"):
            c.append(CNOT, 0, 1)
            c.append(CNOT, 0, 1)
        r = metrics(c)
        assert len(r.subcircuits) == 1
        sub = r.subcircuits[0]
        assert sub.label == "blk"
        assert sub.counts["cnot"] == 2
        assert sub.depth == 2

    def test_decomposed_figures(self):
        c = three_wire("a", "b", "c")
        c.append(TOFFOLI, 0, 1, 2)
        c.append(CNOT, 0, 1)
        r = metrics(c)
        d = r.decomposed
        assert d.counts["toffoli"] == 0
        assert d.counts["cnot"] == 1 + 6
        assert d.counts["h"] == 2
        assert d.t_count == 7
        assert d.total_gates == 16
        # Block accounting: 8 depth units / 4 T-stages per Toffoli.
        assert d.depth == 9
        assert d.t_depth == 4


class TestToffoliTemplate:
    def test_unitary_equals_toffoli_exactly(self):
        gate_1q = {
            H: np.array([[1, 1], [1, -1]]) / np.sqrt(2),
            T: np.diag([1, np.exp(1j * np.pi / 4)]),
            T_DAGGER: np.diag([1, np.exp(-1j * np.pi / 4)]),
            S: np.diag([1, 1j]),
            S_DAGGER: np.diag([1, -1j]),
        }

        def embed_1q(u, wire, width):
            mats = [np.eye(2)] * width
            mats[wire] = u
            full = np.array([[1.0]])
            # Wire 0 is the least-significant bit of the state index.
            for m in mats:
                full = np.kron(m, full)
            return full

        def embed_cnot(ctrl, tgt, width):
            dim = 1 << width
            u = np.zeros((dim, dim))
            for s in range(dim):
                out = s ^ (1 << tgt) if s >> ctrl & 1 else s
                u[out, s] = 1.0
            return u

        width = 3
        u = np.eye(1 << width, dtype=complex)
        for entry in TOFFOLI_TEMPLATE:
            if entry[0] == CNOT:
                g = embed_cnot(entry[1], entry[2], width)
            else:
                g = embed_1q(gate_1q[entry[0]], entry[1], width)
            u = g @ u

        dim = 1 << width
        toffoli = np.zeros((dim, dim))
        for s in range(dim):
            out = s ^ 4 if (s & 3) == 3 else s  # roles 0,1 control, 2 target
            toffoli[out, s] = 1.0
        # Exact equality as a matrix (no global phase correction needed).
        assert np.allclose(u, toffoli, atol=1e-12)

    def test_template_resource_quadruple(self):
        c = three_wire("a", "b", "c")
        for entry in TOFFOLI_TEMPLATE:
            c.append(*entry)
        r = metrics(c)
        assert r.total_gates == 15
        assert r.t_count == 7
        assert r.depth == 8
        assert r.t_depth == 4
        assert sum(TOFFOLI_DECOMP_COUNTS.values()) == 15


class TestStructuralOps:
    def test_inverse_undoes_classical_circuit(self, rng):
        for _ in range(50):
            c = random_classical_circuit(rng)
            back = compose(c, inverse(c))
            sim = Simulator(back)
            for _ in range(20):
                s = rng.getrandbits(c.width)
                assert sim.run(s) == s

    def test_inverse_conjugates_phases_and_relabels_groups(self):
        c = three_wire("a")
        with c.group("blk"):
            c.append(T, 0)
            c.append(S, 0)
        inv = inverse(c)
        kinds = [g.kind for g in inv]
        assert kinds == [S_DAGGER, T_DAGGER]
        assert inv.groups[0].label == "Iblk"

    def test_compose_requires_same_wires(self):
        a = three_wire("a", "b")
        b = three_wire("a", "c")
        with pytest.raises(CircuitError):
            compose(a, b)

    def test_decompose_toffoli(self, rng):
        for _ in range(30):
            c = random_classical_circuit(rng)
            r = metrics(c)
            d = decompose_toffoli(c)
            rd = metrics(d)
            assert rd.toffoli_count == 0
            assert rd.total_gates == r.total_gates + 14 * r.toffoli_count
            assert rd.t_count == 7 * r.toffoli_count
            # Group spans still cover whole gates.
            for grp in d.groups:
                assert 0 <= grp.start <= grp.end <= d.num_gates

    def test_out_permutation_inverts(self):
        c = three_wire("a", "b")
        c.out_permutation = [1, 0]
        inv = inverse(c)
        assert inv.out_permutation == [1, 0]
