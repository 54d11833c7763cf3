"""Arithmetic on binary polynomials represented as integer bitmasks.

A polynomial b_p x^p + ... + b_1 x + b_0 over GF(2) is stored as the
integer with bit i equal to b_i, so the hex notation used throughout the
package maps directly onto coefficients: ``100f3`` is
x^16 + x^7 + x^6 + x^5 + x^4 + x + 1.

:class:`Gf2Poly` wraps such a mask for use as a CRC generator polynomial,
which must have nonzero leading and constant coefficients (the constant
bit keeps x invertible modulo g, the leading bit fixes the degree).
Residues modulo g are plain ints below 2**degree and are manipulated with
the free functions in this module.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_DEGREE = 63  # one machine word holds any supported polynomial


@dataclass(frozen=True, order=True)
class Gf2Poly:
    """A CRC generator polynomial as a coefficient bitmask."""

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 2:
            raise ValueError(f"generator polynomial must have degree >= 1, got mask {self.mask:#x}")
        if not self.mask & 1:
            raise ValueError(
                f"generator polynomial {self.mask:#x} is divisible by x (constant term is zero)"
            )
        if self.degree > MAX_DEGREE:
            raise ValueError(f"degree {self.degree} exceeds the supported maximum {MAX_DEGREE}")

    @property
    def degree(self) -> int:
        """Degree p: index of the highest set coefficient bit."""
        return self.mask.bit_length() - 1

    @property
    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return self.mask.bit_count()

    def to_hex(self) -> str:
        """Lowercase hex mask without prefix; round-trips with :func:`parse_hex`."""
        return format(self.mask, "x")

    def __str__(self) -> str:
        return self.to_hex()


def parse_hex(text: str) -> Gf2Poly:
    """Parse a generator polynomial from its hex coefficient mask.

    The notation covers the full mask including the leading and constant
    bits, e.g. ``"b"`` is x^3 + x + 1.  Raises ValueError for empty or
    non-hex input and for masks describing a polynomial divisible by x.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    try:
        mask = int(text, 16)
    except ValueError:
        raise ValueError(f"invalid hex polynomial {text!r}") from None
    return Gf2Poly(mask)


def reciprocal(g: Gf2Poly) -> Gf2Poly:
    """Coefficient-reversed polynomial x^p * g(1/x); generates an equivalent code."""
    p = g.degree
    mask = g.mask
    rev = 0
    for _ in range(p + 1):
        rev = (rev << 1) | (mask & 1)
        mask >>= 1
    return Gf2Poly(rev)


def canonical(g: Gf2Poly) -> Gf2Poly:
    """The numerically smaller of g and its reciprocal; dedup key for equivalent codes."""
    r = reciprocal(g)
    return g if g.mask <= r.mask else r


def mulx_mod(residue: int, g: Gf2Poly) -> int:
    """(x * residue) mod g for a residue below 2**degree: shift, then reduce once."""
    r = residue << 1
    if r >> g.degree & 1:
        r ^= g.mask
    return r


def order(g: Gf2Poly) -> int:
    """Smallest m >= 1 with x^m == 1 mod g; the length of the parent cyclic code.

    Found by iterating the shift-and-reduce step from residue 1; at most
    2^p - 1 steps for any g with nonzero constant term.
    """
    p = g.degree
    top = 1 << p
    mask = g.mask
    r = 1
    for m in range(1, 1 << p):
        r <<= 1
        if r & top:
            r ^= mask
        if r == 1:
            return m
    raise RuntimeError(f"no return to 1 within 2^{p} steps for {g}; invalid generator or bug")


def crc_remainder(info: int, g: Gf2Poly) -> int:
    """Parity block r(x) = (x^p * i(x)) mod g(x).

    ``info`` holds i(x) in the usual mask convention, bit j being the
    coefficient of x^j.  The assembled word x^p * i(x) + r(x) is divisible
    by g, so the transmitted mask is ``(info << p) | r``.
    """
    if info < 0:
        raise ValueError("information bits must be a nonnegative mask")
    xp_mod = g.mask ^ (1 << g.degree)  # x^p mod g
    r = 0
    for j in reversed(range(info.bit_length())):
        r = mulx_mod(r, g)
        if (info >> j) & 1:
            r ^= xp_mod
    return r
