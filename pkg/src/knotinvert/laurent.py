"""Exact integer Laurent polynomials in one variable.

Coefficients are Python ints, so all arithmetic is arbitrary precision.
The zero polynomial is represented by an empty coefficient tuple.
"""

from __future__ import annotations

from typing import Iterable


class LaurentPoly:
    """An integer Laurent polynomial  c0*t^m + c1*t^(m+1) + ... with m = min_exp.

    Instances are immutable and normalized: the first and last stored
    coefficients are nonzero unless the polynomial is zero.
    """

    __slots__ = ("coeffs", "min_exp")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        coeffs = list(coeffs)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.coeffs: tuple[int, ...] = ()
            self.min_exp = 0
        else:
            self.coeffs = tuple(coeffs[lo:hi])
            self.min_exp = min_exp + lo

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls((c,))

    @classmethod
    def term(cls, c: int, exp: int) -> "LaurentPoly":
        """c * t^exp"""
        return cls((c,), exp)

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,) and self.min_exp == 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.min_exp == other.min_exp

    def __hash__(self) -> int:
        return hash((self.coeffs, self.min_exp))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((-c for c in self.coeffs), self.min_exp)

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly) else -other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for units")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly(self.coeffs, self.min_exp + k)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if the division leaves a remainder.

        Needed by fraction-free (Bareiss) elimination, where every division
        is exact by construction.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        rem = list(self.coeffs)
        den = other.coeffs
        qlen = len(rem) - len(den) + 1
        if qlen <= 0:
            raise ValueError("inexact Laurent division")
        quot = [0] * qlen
        lead = den[-1]
        for k in range(qlen - 1, -1, -1):
            c = rem[k + len(den) - 1]
            if c % lead != 0:
                raise ValueError("inexact Laurent division")
            q = c // lead
            quot[k] = q
            if q:
                for j, d in enumerate(den):
                    rem[k + j] -= q * d
        if any(rem):
            raise ValueError("inexact Laurent division")
        return LaurentPoly(quot, self.min_exp - other.min_exp)

    def substitute_inverse(self) -> "LaurentPoly":
        """The polynomial with t replaced by t^-1."""
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.max_exp)

    def eval_int(self, t: int) -> "int | float":
        """Evaluate at an integer t (t != 0; negative exponents give fractions
        unless t is a unit, so callers mostly use t = 1 or t = -1)."""
        total = 0
        for i, c in enumerate(self.coeffs):
            e = self.min_exp + i
            if e >= 0:
                total += c * t**e
            else:
                total += c / t ** (-e)
        return total

    def is_palindromic(self) -> bool:
        """True iff the coefficient sequence reads the same in both directions."""
        return self.coeffs == tuple(reversed(self.coeffs))

    def exponents(self) -> list[int]:
        return [self.min_exp + i for i, c in enumerate(self.coeffs) if c]

    def format(self, var: str = "t") -> str:
        """Render as ``c0 + c1*t + c2*t^2 ...`` with explicit signs.

        Terms appear in increasing exponent order; zero coefficients are
        skipped; the zero polynomial renders as ``0``.
        """
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + i
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r}, min_exp={self.min_exp})"
