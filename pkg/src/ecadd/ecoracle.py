"""Classical oracle for ordinary binary elliptic curves.

Curves are short Weierstrass curves over F2^n,

    E: y^2 + x y = x^3 + a2 x^2 + a6,   a6 != 0  (non-supersingular),

with affine points plus the point at infinity O, and Lopez-Dahab (LD)
projective coordinates (X, Y, Z), Z != 0, representing the affine point
(X/Z, Y/Z^2).

Two independent addition routes are provided:

* ``affine_add``: the complete branching affine group law (handles O,
  inverses, and doubling);
* ``aldaoud_madd``: the branch-free mixed-coordinate formula for the
  generic case P1 != O and P1 != +-P2 with P2 affine, which is exactly
  what the synthesized circuit computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .gf2field import FieldElem, IrreduciblePoly, solve_quadratic


class PointError(ValueError):
    """Invalid point or curve parameter."""


class GenericBranchError(ValueError):
    """Mixed addition invoked outside its generic-case precondition."""


@dataclass(frozen=True)
class Curve:
    a2: FieldElem
    a6: FieldElem

    def __post_init__(self):
        if self.a2.field.poly.bits != self.a6.field.poly.bits:
            raise PointError("curve coefficients from different fields")
        if self.a6.value == 0:
            raise PointError("a6 must be nonzero (supersingular curves excluded)")

    @property
    def field(self) -> IrreduciblePoly:
        return self.a2.field


@dataclass(frozen=True)
class AffinePoint:
    """An affine point, or O when both coordinates are None."""

    x: Optional[FieldElem]
    y: Optional[FieldElem]

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise PointError("both coordinates must be set, or neither")

    @classmethod
    def infinity(cls) -> "AffinePoint":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None


@dataclass(frozen=True)
class LDPoint:
    """Lopez-Dahab coordinates (X, Y, Z); Z = 0 encodes O."""

    X: FieldElem
    Y: FieldElem
    Z: FieldElem

    @property
    def is_infinity(self) -> bool:
        return self.Z.value == 0


def on_curve_affine(curve: Curve, p: AffinePoint) -> bool:
    if p.is_infinity:
        return True
    x, y = p.x, p.y
    lhs = y.square() + x * y
    rhs = x.square() * x + curve.a2 * x.square() + curve.a6
    return lhs.value == rhs.value


def on_curve_ld(curve: Curve, p: LDPoint) -> bool:
    """Projective curve membership: Y^2 + XYZ = X^3 Z + a2 X^2 Z^2 + a6 Z^4."""
    if p.is_infinity:
        return True
    X, Y, Z = p.X, p.Y, p.Z
    lhs = Y.square() + X * Y * Z
    rhs = X.square() * X * Z + curve.a2 * X.square() * Z.square() \
        + curve.a6 * Z.square().square()
    return lhs.value == rhs.value


def negate(p: AffinePoint) -> AffinePoint:
    if p.is_infinity:
        return p
    return AffinePoint(p.x, p.x + p.y)


def affine_equal(p: AffinePoint, q: AffinePoint) -> bool:
    if p.is_infinity or q.is_infinity:
        return p.is_infinity and q.is_infinity
    return p.x.value == q.x.value and p.y.value == q.y.value


def affine_add(curve: Curve, p1: AffinePoint, p2: AffinePoint) -> AffinePoint:
    """Complete affine group law (all branches)."""
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    x1, y1 = p1.x, p1.y
    x2, y2 = p2.x, p2.y
    if x1.value == x2.value:
        if (y1 + y2).value == x2.value:
            return AffinePoint.infinity()  # p1 = -p2 (incl. 2-torsion doubling)
        # Doubling.
        m = x2 + y2 / x2
        x3 = m.square() + m + curve.a2
        y3 = x2.square() + (m + curve.field.one()) * x3
        return AffinePoint(x3, y3)
    m = (y1 + y2) / (x1 + x2)
    x3 = m.square() + m + x1 + x2 + curve.a2
    y3 = (x2 + x3) * m + x3 + y2
    return AffinePoint(x3, y3)


def affine_to_ld(p: AffinePoint, z: Optional[FieldElem] = None) -> LDPoint:
    """An LD representative of an affine point; z (nonzero) picks the class
    representative, defaulting to Z = 1."""
    if p.is_infinity:
        raise PointError("O has no finite LD representative here")
    field = p.x.field
    if z is None:
        z = field.one()
    if z.value == 0:
        raise PointError("representative scale z must be nonzero")
    return LDPoint(p.x * z, p.y * z.square(), z)


def ld_to_affine(p: LDPoint) -> AffinePoint:
    if p.is_infinity:
        return AffinePoint.infinity()
    zi = p.Z.inverse()
    return AffinePoint(p.X * zi, p.Y * zi.square())


def ld_equal(p: LDPoint, q: LDPoint) -> bool:
    """Equality of the represented points (projective classes)."""
    if p.is_infinity or q.is_infinity:
        return p.is_infinity and q.is_infinity
    # X_p / Z_p == X_q / Z_q and Y_p / Z_p^2 == Y_q / Z_q^2, cross-multiplied.
    if (p.X * q.Z).value != (q.X * p.Z).value:
        return False
    return (p.Y * q.Z.square()).value == (q.Y * p.Z.square()).value


def aldaoud_madd(curve: Curve, p1: LDPoint, p2: AffinePoint,
                 checked: bool = True) -> LDPoint:
    """Mixed-coordinate addition P3 = P1 + P2 (P1 in LD, P2 affine).

    Branch-free generic-case formula:

        A = Y1 + y2 Z1^2        B = X1 + x2 Z1       C = B Z1
        Z3 = C^2                D = x2 Z3
        X3 = A^2 + C (A + B^2 + a2 C)
        Y3 = (D + X3)(A C + Z3) + (y2 + x2) Z3^2

    With ``checked`` the generic-case precondition (P1, P2 != O and
    P1 != +-P2) is validated first.
    """
    if checked:
        if p1.is_infinity or p2.is_infinity:
            raise GenericBranchError("mixed addition requires finite inputs")
        p1a = ld_to_affine(p1)
        if affine_equal(p1a, p2) or affine_equal(p1a, negate(p2)):
            raise GenericBranchError("mixed addition requires P1 != +-P2")
    X1, Y1, Z1 = p1.X, p1.Y, p1.Z
    x2, y2 = p2.x, p2.y
    a2 = curve.a2
    A = Y1 + y2 * Z1.square()
    B = X1 + x2 * Z1
    C = B * Z1
    Z3 = C.square()
    D = x2 * Z3
    X3 = A.square() + C * (A + B.square() + a2 * C)
    Y3 = (D + X3) * (A * C + Z3) + (y2 + x2) * Z3.square()
    return LDPoint(X3, Y3, Z3)


def random_point(curve: Curve, rng) -> AffinePoint:
    """A uniformly random affine point (never O)."""
    field = curve.field
    n = field.n
    while True:
        x = field.elem(rng.getrandbits(n))
        rhs = x.square() * x + curve.a2 * x.square() + curve.a6
        if x.value == 0:
            return AffinePoint(x, rhs.sqrt())
        z = solve_quadratic(rhs / x.square())
        if z is None:
            continue
        if rng.getrandbits(1):
            z = z + field.one()
        return AffinePoint(x, x * z)


def scalar_mul(curve: Curve, k: int, p: AffinePoint) -> AffinePoint:
    """k * P by double-and-add over the complete affine law."""
    if k < 0:
        return scalar_mul(curve, -k, negate(p))
    acc = AffinePoint.infinity()
    addend = p
    while k:
        if k & 1:
            acc = affine_add(curve, acc, addend)
        addend = affine_add(curve, addend, addend)
        k >>= 1
    return acc


def all_affine_points(curve: Curve) -> list[AffinePoint]:
    """Every affine point, by exhaustive scan (small fields only)."""
    field = curve.field
    if field.n > 8:
        raise ValueError("exhaustive point enumeration limited to n <= 8")
    out = []
    for xv in range(1 << field.n):
        for yv in range(1 << field.n):
            p = AffinePoint(field.elem(xv), field.elem(yv))
            if on_curve_affine(curve, p):
                out.append(p)
    return out
