"""Bit-packed simulation of classical reversible circuits.

A basis state is a Python integer whose bit i is the value on wire i.
Gates are precompiled to (control_mask, target_mask) pairs, so NOT, CNOT
and Toffoli all simulate with one AND-compare and one XOR; this keeps the
inner loop fast enough for multi-million-gate sweeps.
"""

from __future__ import annotations

from .circuit_ir import CNOT, NOT, TOFFOLI, Circuit


class UnsupportedGate(ValueError):
    """Circuit contains a non-classical gate (H/T/S...)."""


class Simulator:
    """Reusable simulator for a fixed classical circuit."""

    def __init__(self, circuit: Circuit):
        ops = []
        for g in circuit.gate_tuples():
            k = g[0]
            if k == NOT:
                ops.append((0, 1 << g[1]))
            elif k == CNOT:
                ops.append((1 << g[1], 1 << g[2]))
            elif k == TOFFOLI:
                ops.append(((1 << g[1]) | (1 << g[2]), 1 << g[3]))
            else:
                raise UnsupportedGate(
                    f"cannot simulate non-classical gate kind {k}"
                )
        self._ops = ops
        self._width = circuit.width
        perm = circuit.out_permutation
        self._perm = None if perm == list(range(circuit.width)) else list(perm)

    @property
    def width(self) -> int:
        return self._width

    def run(self, state: int) -> int:
        if not 0 <= state < (1 << self._width):
            raise ValueError("state out of range for circuit width")
        s = state
        for cm, tm in self._ops:
            if s & cm == cm:
                s ^= tm
        if self._perm is not None:
            out = 0
            for logical, physical in enumerate(self._perm):
                out |= (s >> physical & 1) << logical
            s = out
        return s


def simulate(circuit: Circuit, state: int) -> int:
    """One-shot simulation of a classical circuit on a packed basis state."""
    return Simulator(circuit).run(state)


def truth_table(circuit: Circuit) -> list[int]:
    """Full truth table (only sensible for small widths)."""
    sim = Simulator(circuit)
    if circuit.width > 24:
        raise ValueError("truth table limited to width <= 24")
    return [sim.run(s) for s in range(1 << circuit.width)]
