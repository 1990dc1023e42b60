"""Reversible-circuit synthesis of F2^n field operations.

All routines append gates to an existing :class:`~ecadd.circuit_ir.Circuit`
over n-wire registers.  Conventions:

* a linear map M is synthesized out of place as ``dst ^= M * src`` with
  exactly ``weight(M)`` CNOTs, emitted color class by color class from a
  minimal edge coloring of the map's bipartite graph, so the scheduled
  CNOT depth is exactly ``max_degree(M)``;
* the multiplier maps ``|a> |b> |c> -> |a> |b> |c + a*b>`` for any
  accumulator value c, using n^2 Toffolis, 2(n-1)(w-2) CNOTs for a
  modulus of weight w, and no ancillae: operand b is cycled through
  multiples x^i * b in place and restored at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit_ir import CNOT, TOFFOLI, Circuit, CircuitError
from .edgecolor import color_edges, graph_of_matrix
from .gf2field import FieldElem, IrreduciblePoly
from .linmaps import (
    BinMatrix,
    matrix_of_const_mul,
    matrix_of_sqrt,
    matrix_of_squaring,
)


class RegisterOverlap(CircuitError):
    """Registers passed to a synthesis routine share wires."""


@dataclass(frozen=True)
class RegisterRef:
    """A named, ordered slice of circuit wires (bit i on wires[i])."""

    name: str
    wires: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.wires)


def add_register(circuit: Circuit, name: str, n: int) -> RegisterRef:
    """Allocate n fresh wires named ``{name}_{i}``."""
    return RegisterRef(name, tuple(circuit.add_wire(f"{name}_{i}") for i in range(n)))


def new_circuit(n: int, *names: str) -> tuple[Circuit, list[RegisterRef]]:
    """Fresh circuit with one n-wire register per name."""
    c = Circuit()
    return c, [add_register(c, name, n) for name in names]


def _require_disjoint(*regs: RegisterRef):
    seen: set[int] = set()
    for r in regs:
        for w in r.wires:
            if w in seen:
                raise RegisterOverlap(f"register {r.name} overlaps another operand")
            seen.add(w)


def linear_layers(matrix: BinMatrix) -> list[list[tuple[int, int]]]:
    """CNOT layers (source column, target row) for a linear map, grouped
    by color class of a minimal edge coloring."""
    graph = graph_of_matrix(matrix)
    return color_edges(graph).layers(graph)


def synth_linear(circuit: Circuit, matrix: BinMatrix, src: RegisterRef,
                 dst: RegisterRef, layers=None):
    """Append ``dst ^= M * src`` (weight(M) CNOTs, depth max_degree(M))."""
    if matrix.n != src.n or matrix.n != dst.n:
        raise CircuitError("matrix dimension does not match register width")
    _require_disjoint(src, dst)
    if layers is None:
        layers = linear_layers(matrix)
    sw, dw = src.wires, dst.wires
    gates = []
    for layer in layers:
        gates.extend((CNOT, sw[i], dw[j]) for i, j in layer)
    circuit.extend_raw(gates)


def synth_add_inplace(circuit: Circuit, src: RegisterRef, dst: RegisterRef):
    """Append ``dst ^= src``: n transversal CNOTs, depth 1."""
    if src.n != dst.n:
        raise CircuitError("register widths differ")
    _require_disjoint(src, dst)
    circuit.extend_raw(
        (CNOT, s, d) for s, d in zip(src.wires, dst.wires)
    )


def synth_square(circuit: Circuit, field: IrreduciblePoly, src: RegisterRef,
                 dst: RegisterRef, layers=None):
    """``dst ^= src^2`` via the Frobenius matrix."""
    synth_linear(circuit, matrix_of_squaring(field), src, dst, layers)


def synth_sqrt(circuit: Circuit, field: IrreduciblePoly, src: RegisterRef,
               dst: RegisterRef, layers=None):
    """``dst ^= sqrt(src)`` via the inverse Frobenius matrix."""
    synth_linear(circuit, matrix_of_sqrt(field), src, dst, layers)


def synth_const_mul(circuit: Circuit, c: FieldElem, src: RegisterRef,
                    dst: RegisterRef, layers=None):
    """``dst ^= c * src`` for a nonzero constant c."""
    synth_linear(circuit, matrix_of_const_mul(c), src, dst, layers)


def synth_const_mul_square(circuit: Circuit, c: FieldElem, src: RegisterRef,
                           dst: RegisterRef, layers=None):
    """``dst ^= c * src^2`` as a single fused linear map."""
    m = matrix_of_const_mul(c) @ matrix_of_squaring(c.field)
    synth_linear(circuit, m, src, dst, layers)


def mult_gates(field: IrreduciblePoly, a: RegisterRef, b: RegisterRef,
               acc: RegisterRef) -> list[tuple]:
    """Gate list of the in-place modular multiplier ``acc ^= a * b``.

    Operand b is replaced by x*b (mod p) before each partial-product row
    after the first -- a cyclic wire relabeling plus one CNOT fan-out from
    the former top bit per inner reduction term -- and the n-1 shifts are
    undone at the end, restoring b exactly.
    """
    n = field.n
    exps = [e for e in field.support if 0 < e < n]
    view = list(b.wires)
    gates = []
    for i in range(n):
        if i:
            top = view[-1]
            gates.extend((CNOT, top, view[e - 1]) for e in exps)
            view = [top] + view[:-1]
        ai = a.wires[i]
        gates.extend((TOFFOLI, ai, view[j], acc.wires[j]) for j in range(n))
    for _ in range(n - 1):
        top = view[0]
        view = view[1:] + [top]
        gates.extend((CNOT, top, view[e - 1]) for e in exps)
    return gates


def synth_mult(circuit: Circuit, field: IrreduciblePoly, a: RegisterRef,
               b: RegisterRef, acc: RegisterRef) -> list[tuple]:
    """Append ``acc ^= a * b`` and return the emitted gate list (which a
    caller may replay reversed to uncompute the product)."""
    if not (field.n == a.n == b.n == acc.n):
        raise CircuitError("register widths do not match the field degree")
    _require_disjoint(a, b, acc)
    gates = mult_gates(field, a, b, acc)
    circuit.extend_raw(gates)
    return gates


def standalone_multiplier(field: IrreduciblePoly) -> Circuit:
    """A fresh 3n-wire circuit computing ``acc ^= a * b``."""
    c, (a, b, acc) = new_circuit(field.n, "a", "b", "acc")
    synth_mult(c, field, a, b, acc)
    return c
