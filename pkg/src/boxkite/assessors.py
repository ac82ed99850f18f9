"""Assessors, tone rows and the mutual zero-divisor test for one strut constant."""

from __future__ import annotations

from dataclasses import dataclass

from .cdp import Multivector, SignedUnit, check_exponent, product_sign, unit, unit_product

SLASH = 1
BACKSLASH = -1


def sign_char(sign: int) -> str:
    return "+" if sign > 0 else "-"


@dataclass(frozen=True)
class StrutContext:
    """Dimension exponent ``n`` and strut constant ``s`` (0 < s < 2^(n-1))."""

    n: int
    s: int

    def __post_init__(self):
        check_exponent(self.n)
        if self.n < 4:
            raise ValueError(f"zero divisors need n >= 4, got {self.n}")
        g = 1 << (self.n - 1)
        if not 0 < self.s < g:
            raise ValueError(f"strut constant must satisfy 0 < S < {g}, got {self.s}")

    @property
    def g(self) -> int:
        """Generator index 2^(n-1)."""
        return 1 << (self.n - 1)

    @property
    def x(self) -> int:
        """Strut bound ``G + S`` (equal to ``G ^ S``)."""
        return self.g + self.s

    @property
    def k(self) -> int:
        """Number of assessors, 2^(n-1) - 2."""
        return self.g - 2

    def assessor(self, low: int) -> "Assessor":
        if not 0 < low < self.g or low == self.s:
            raise ValueError(f"no assessor with low index {low} for {self}")
        return Assessor(low, low ^ self.x)

    def contains(self, a: "Assessor") -> bool:
        return 0 < a.low < self.g and a.low != self.s and a.high == a.low ^ self.x

    def require(self, *assessors: "Assessor") -> None:
        for a in assessors:
            if not self.contains(a):
                raise ValueError(f"{a} is not an assessor of {self}")

    def __str__(self) -> str:
        return f"N={self.n} S={self.s}"


@dataclass(frozen=True, order=True)
class Assessor:
    """The plane spanned by ``i_low`` and ``i_high``."""

    low: int
    high: int

    def __str__(self) -> str:
        return f"({self.low},{self.high})"


@dataclass(frozen=True)
class Diagonal:
    """One of the two zero-divisor lines of an assessor.

    ``orientation`` is +1 for the slash ``i_low + i_high`` and -1 for the
    backslash ``i_low - i_high``.
    """

    assessor: Assessor
    orientation: int

    def __post_init__(self):
        if self.orientation not in (SLASH, BACKSLASH):
            raise ValueError(f"orientation must be +1 or -1, got {self.orientation!r}")

    def toggled(self) -> "Diagonal":
        return Diagonal(self.assessor, -self.orientation)

    def vector(self, n: int) -> Multivector:
        return Multivector.from_terms(
            n, {self.assessor.low: 1, self.assessor.high: self.orientation}
        )

    @property
    def symbol(self) -> str:
        return "/" if self.orientation == SLASH else "\\"

    def __str__(self) -> str:
        return f"{self.assessor}{self.symbol}"


def tone_row(ctx: StrutContext) -> list[Assessor]:
    """Assessors in emanation-table heading order.

    Scanning low indices upward, the smaller member of each strut-opposite
    pair takes the next free slot from the left and its partner the mirror
    slot from the right.
    """
    raw = [i for i in range(1, ctx.g) if i != ctx.s]
    k = len(raw)
    lows = [0] * k
    left, right = 0, k - 1
    for low in raw:
        partner = low ^ ctx.s
        if low < partner:
            lows[left] = low
            lows[right] = partner
            left += 1
            right -= 1
            if left > right:
                break
    return [ctx.assessor(low) for low in lows]


def strut_opposite(a: Assessor, ctx: StrutContext) -> Assessor:
    ctx.require(a)
    return ctx.assessor(a.low ^ ctx.s)


def _cross_products(a1: Assessor, a2: Assessor) -> tuple[int, int, int, int]:
    """Signs of the four unit products UL, UR, LL, LR of ``a1 * a2``."""
    return (
        product_sign(a1.high, a2.low),
        product_sign(a1.high, a2.high),
        product_sign(a1.low, a2.low),
        product_sign(a1.low, a2.high),
    )


def mutual_zd_edge(a1: Assessor, a2: Assessor, ctx: StrutContext) -> int | None:
    """Edge sign joining two assessors, or None if they do not zero-divide.

    The result is +1 when like-oriented diagonals multiply to zero
    (slash * slash, backslash * backslash) and -1 when the mixed pairings do.
    """
    ctx.require(a1, a2)
    if a1 == a2:
        return None
    ul, ur, ll, lr = _cross_products(a1, a2)
    outer_coherent = ul == lr
    inner_coherent = ur == ll
    if outer_coherent != inner_coherent:
        return None
    # Coherent sign pairs cancel only across opposite orientations.
    return -1 if outer_coherent else 1


def emanation_of(a1: Assessor, a2: Assessor, ctx: StrutContext) -> SignedUnit | None:
    """Edge sign attached to the low index of the third assessor in the shared sail."""
    edge = mutual_zd_edge(a1, a2, ctx)
    if edge is None:
        return None
    return SignedUnit(edge, a1.low ^ a2.low)


def zero_partner(d: Diagonal, other: Assessor, ctx: StrutContext) -> Diagonal | None:
    """The diagonal of ``other`` that ``d`` multiplies to zero, if any."""
    edge = mutual_zd_edge(d.assessor, other, ctx)
    if edge is None:
        return None
    return Diagonal(other, d.orientation * edge)


@dataclass(frozen=True)
class StrutSignature:
    """Products across one strut, zigzag end ``(z, Z)`` and vent end ``(v, V)``."""

    zigzag: Assessor
    vent: Assessor
    VZ: SignedUnit
    vz: SignedUnit
    Zv: SignedUnit
    Vz: SignedUnit
    Zz: SignedUnit
    vV: SignedUnit

    def index_relations_hold(self, ctx: StrutContext) -> bool:
        return (
            self.VZ.index == self.vz.index == ctx.s
            and self.Zv.index == self.Vz.index == ctx.g
            and self.Zz.index == self.vV.index == ctx.x
        )


def strut_product_signature(z: Assessor, ctx: StrutContext) -> StrutSignature:
    v = strut_opposite(z, ctx)
    Z, zl, V, vl = unit(z.high), unit(z.low), unit(v.high), unit(v.low)
    return StrutSignature(
        zigzag=z,
        vent=v,
        VZ=unit_product(V, Z),
        vz=unit_product(vl, zl),
        Zv=unit_product(Z, vl),
        Vz=unit_product(V, zl),
        Zz=unit_product(Z, zl),
        vV=unit_product(vl, V),
    )
