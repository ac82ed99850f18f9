"""Exact Cayley-Dickson arithmetic on basis units and integer multivectors.

Units of the 2^N-ions are indexed 0 .. 2^N - 1 (0 is the real unit).  The
index of a product is the XOR of the factor indices; only the sign needs
work, and that is settled by a short recursion that strips the highest bit
(the generator) from the indices until a quaternion product remains.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import itertools

import numpy as np

#: Largest dimension exponent accepted anywhere in the package.
MAX_EXPONENT = 16

# Sign table for products of quaternion indices 0..3 (row = left factor).
_QSIGNS = (
    (+1, +1, +1, +1),
    (+1, -1, +1, -1),
    (+1, -1, -1, +1),
    (+1, +1, -1, -1),
)


def check_exponent(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or n < 1 or n > MAX_EXPONENT:
        raise ValueError(f"dimension exponent must be in 1..{MAX_EXPONENT}, got {n!r}")
    return int(n)


def product_sign(left: int, right: int) -> int:
    """Sign of i_left * i_right for non-negative unit indices."""
    if left < 0 or right < 0:
        raise ValueError("unit indices must be non-negative")
    neg = 1
    while True:
        if left == 0 or right == 0:
            return neg
        if left == right:
            return -neg
        lbits = left.bit_length()
        rbits = right.bit_length()
        if lbits < 3 and rbits < 3:
            return neg * _QSIGNS[left][right]
        if lbits == rbits:
            g = 1 << (lbits - 1)
            if left == g:
                return neg
            if right == g:
                return -neg
            if left ^ right == g:
                return -neg if right > left else neg
            # (G + r)(G + c) = -(r c)
            neg = -neg
            left -= g
            right -= g
        elif lbits < rbits:
            g = 1 << (rbits - 1)
            if right == g:
                return neg
            if left ^ right == g:
                return -neg
            neg = -neg
            right -= g
        else:
            g = 1 << (lbits - 1)
            if left ^ right == g:
                return neg
            neg = -neg
            if left == g:
                return neg
            left -= g


@lru_cache(maxsize=None)
def sign_table(n: int) -> np.ndarray:
    """Read-only int8 array ``t`` with ``t[a, b]`` the sign of i_a * i_b."""
    n = check_exponent(n)
    if n > 10:
        raise ValueError("sign tables are only built for n <= 10")
    size = 1 << n
    table = np.empty((size, size), dtype=np.int8)
    for a in range(size):
        for b in range(size):
            table[a, b] = product_sign(a, b)
    table.setflags(write=False)
    return table


@dataclass(frozen=True, order=True)
class SignedUnit:
    """A basis unit ``sign * i_index``."""

    sign: int
    index: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be -1 or +1, got {self.sign!r}")
        if self.index < 0:
            raise ValueError(f"index must be non-negative, got {self.index!r}")

    @classmethod
    def parse(cls, text: str | int) -> "SignedUnit":
        """Read ``"7"``, ``"+7"`` or ``"-7"``; ``-0`` is the negative real unit."""
        s = str(text).strip()
        sign = -1 if s.startswith("-") else 1
        return cls(sign, int(s.lstrip("+-")))

    def __neg__(self) -> "SignedUnit":
        return SignedUnit(-self.sign, self.index)

    def __mul__(self, other: "SignedUnit") -> "SignedUnit":
        if not isinstance(other, SignedUnit):
            return NotImplemented
        return unit_product(self, other)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.index}"


def unit_product(a: SignedUnit, b: SignedUnit, n: int | None = None) -> SignedUnit:
    """Signed product of two basis units.

    When ``n`` is given both indices must be below 2^n.
    """
    if n is not None:
        bound = 1 << check_exponent(n)
        if a.index >= bound or b.index >= bound:
            raise ValueError(f"indices {a.index}, {b.index} out of range for 2^{n}-ions")
    return SignedUnit(a.sign * b.sign * product_sign(a.index, b.index), a.index ^ b.index)


def unit(index: int, sign: int = 1) -> SignedUnit:
    return SignedUnit(sign, index)


@dataclass(frozen=True)
class Multivector:
    """Element of the 2^N-ions with exact integer coefficients."""

    exponent: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        check_exponent(self.exponent)
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) != 1 << self.exponent:
            raise ValueError(
                f"expected {1 << self.exponent} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, n: int) -> "Multivector":
        return cls(n, (0,) * (1 << n))

    @classmethod
    def basis(cls, n: int, index: int, sign: int = 1) -> "Multivector":
        coeffs = [0] * (1 << n)
        coeffs[index] = sign
        return cls(n, tuple(coeffs))

    @classmethod
    def from_terms(cls, n: int, terms: dict[int, int]) -> "Multivector":
        coeffs = [0] * (1 << n)
        for index, value in terms.items():
            coeffs[index] += value
        return cls(n, tuple(coeffs))

    @property
    def dimension(self) -> int:
        return 1 << self.exponent

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def terms(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coefficients) if c}

    def _check(self, other: "Multivector") -> None:
        if not isinstance(other, Multivector):
            raise TypeError(f"expected Multivector, got {type(other).__name__}")
        if other.exponent != self.exponent:
            raise ValueError(
                f"dimension mismatch: 2^{self.exponent} vs 2^{other.exponent}"
            )

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        return Multivector(
            self.exponent, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        return Multivector(
            self.exponent, tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self) -> "Multivector":
        return Multivector(self.exponent, tuple(-c for c in self.coefficients))

    def scale(self, k: int) -> "Multivector":
        return Multivector(self.exponent, tuple(k * c for c in self.coefficients))

    def __mul__(self, other: "Multivector") -> "Multivector":
        return multivector_product(self, other)

    def __str__(self) -> str:
        parts = [f"{c:+d}*e{i}" for i, c in self.terms().items()]
        return " ".join(parts) if parts else "0"


def multivector_product(x: Multivector, y: Multivector) -> Multivector:
    """Bilinear extension of :func:`unit_product`."""
    x._check(y)
    out = [0] * x.dimension
    yterms = y.terms()
    for i, a in x.terms().items():
        for j, b in yterms.items():
            out[i ^ j] += product_sign(i, j) * a * b
    return Multivector(x.exponent, tuple(out))


def squared_norm(x: Multivector) -> int:
    return sum(c * c for c in x.coefficients)


def norm_composition_defect(x: Multivector, y: Multivector) -> int:
    """``|xy|^2 - |x|^2 |y|^2``; identically zero up to the octonions."""
    return squared_norm(multivector_product(x, y)) - squared_norm(x) * squared_norm(y)


@dataclass(frozen=True)
class AssociativeTriplet:
    """XOR-closed index triple, with the cyclic order whose products are positive.

    ``oriented_order`` starts at the smallest index; ``counting_order_consistent``
    is true when the other two also appear in increasing order.
    """

    indices: frozenset[int]
    oriented_order: tuple[int, int, int]
    counting_order_consistent: bool

    @classmethod
    def from_indices(cls, a: int, b: int, c: int) -> "AssociativeTriplet":
        lo, mid, hi = sorted((a, b, c))
        if len({a, b, c}) != 3 or lo <= 0 or lo ^ mid != hi:
            raise ValueError(f"({a}, {b}, {c}) is not an XOR-closed triple of units")
        if product_sign(lo, mid) > 0:
            order, consistent = (lo, mid, hi), True
        else:
            order, consistent = (lo, hi, mid), False
        return cls(frozenset(order), order, consistent)

    def is_associative(self) -> bool:
        """Check (xy)z == x(yz) over every ordering of the three units."""
        for p, q, r in itertools.permutations(self.oriented_order):
            x, y, z = unit(p), unit(q), unit(r)
            if (x * y) * z != x * (y * z):
                return False
        return True

    def __str__(self) -> str:
        return "({}, {}, {})".format(*self.oriented_order)


def enumerate_triplets(n: int) -> list[AssociativeTriplet]:
    """All associative triplets of the 2^n-ions, ordered by sorted indices."""
    n = check_exponent(n)
    if n < 2:
        raise ValueError("associative triplets need n >= 2")
    size = 1 << n
    out = []
    for a in range(1, size):
        for b in range(a + 1, size):
            c = a ^ b
            if c > b:
                out.append(AssociativeTriplet.from_indices(a, b, c))
    return out


def triplet_count(n: int) -> int:
    return ((1 << n) - 1) * ((1 << n) - 2) // 6
