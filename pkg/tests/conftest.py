"""Shared fixtures and independent reference implementations.

The reference ("oracle") routines here are deliberately written from
scratch -- naive, slow, and structurally different from the package code
-- so that agreement between the two is meaningful.
"""

from __future__ import annotations

import random

import pytest

from ecadd.circuit_ir import CNOT, NOT, TOFFOLI, Circuit
from ecadd.gf2field import IrreduciblePoly


# ----------------------------------------------------------------------
# Reference polynomial arithmetic over GF(2), coefficient-list style
# ----------------------------------------------------------------------

def bits_to_coeffs(bits: int) -> list[int]:
    out = []
    while bits:
        out.append(bits & 1)
        bits >>= 1
    return out or [0]


def coeffs_to_bits(coeffs) -> int:
    return sum((c & 1) << i for i, c in enumerate(coeffs))


def ref_poly_mul(a: int, b: int) -> int:
    """Schoolbook convolution over GF(2)."""
    ca, cb = bits_to_coeffs(a), bits_to_coeffs(b)
    out = [0] * (len(ca) + len(cb))
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            out[i + j] ^= x & y
    return coeffs_to_bits(out)


def ref_poly_mod(a: int, m: int) -> int:
    """Long division remainder over GF(2)."""
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def ref_field_mul(a: int, b: int, modulus: int) -> int:
    return ref_poly_mod(ref_poly_mul(a, b), modulus)


def ref_is_irreducible(bits: int) -> bool:
    """Trial division by every lower-degree polynomial (small degrees)."""
    n = bits.bit_length() - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    for d in range(2, 1 << n):
        if d.bit_length() - 1 >= 1 and ref_poly_mod(bits, d) == 0 \
                and d.bit_length() - 1 < n:
            return False
    return True


def first_irreducible(n: int) -> IrreduciblePoly:
    """Deterministic smallest irreducible polynomial of degree n."""
    for mid in range(1 << (n - 1)):
        bits = (1 << n) | (mid << 1) | 1
        try:
            return IrreduciblePoly.from_string(_poly_text(bits))
        except ValueError:
            continue
    raise AssertionError(f"no irreducible polynomial of degree {n}?")


def _poly_text(bits: int) -> str:
    terms = []
    i = 0
    while bits:
        if bits & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        bits >>= 1
        i += 1
    return "+".join(terms)


# ----------------------------------------------------------------------
# Random classical circuits (for round-trip / simulator tests)
# ----------------------------------------------------------------------

def random_classical_circuit(rng: random.Random, max_wires: int = 8,
                             max_gates: int = 30) -> Circuit:
    c = Circuit()
    width = rng.randint(1, max_wires)
    for i in range(width):
        c.add_wire(f"w{i}")
    open_group = False
    for _ in range(rng.randint(0, max_gates)):
        if not open_group and width >= 1 and rng.random() < 0.15:
            c.begin_group(rng.choice(("blk", "S", "M", "xyZ")))
            open_group = True
        choices = [NOT]
        if width >= 2:
            choices.append(CNOT)
        if width >= 3:
            choices.append(TOFFOLI)
        kind = rng.choice(choices)
        wires = rng.sample(range(width), (1, 2, 3)[kind])
        c.append(kind, *wires)
        if open_group and rng.random() < 0.3:
            c.end_group()
            open_group = False
    if open_group:
        c.end_group()
    return c


def ref_simulate(circuit: Circuit, state: int) -> int:
    """Independent gate-by-gate simulation using the Gate view."""
    bits = [state >> i & 1 for i in range(circuit.width)]
    for g in circuit:
        ws = g.wires
        if g.name == "not":
            bits[ws[0]] ^= 1
        elif g.name == "cnot":
            bits[ws[1]] ^= bits[ws[0]]
        elif g.name == "toffoli":
            bits[ws[2]] ^= bits[ws[0]] & bits[ws[1]]
        else:
            raise AssertionError(f"non-classical gate {g.name}")
    out = [bits[p] for p in circuit.out_permutation]
    return sum(b << i for i, b in enumerate(out))


# ----------------------------------------------------------------------
# Fixtures
# ----------------------------------------------------------------------

@pytest.fixture
def f4():
    return IrreduciblePoly.from_string("1+x+x^2")


@pytest.fixture
def f8():
    return IrreduciblePoly.from_string("1+x+x^3")


@pytest.fixture
def f16():
    return IrreduciblePoly.from_string("1+x+x^4")


@pytest.fixture
def f128():
    return IrreduciblePoly.from_string("1+x+x^7")


@pytest.fixture
def rng():
    return random.Random(0xEC0DD)
