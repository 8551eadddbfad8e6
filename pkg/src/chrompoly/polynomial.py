"""Exact integer polynomials in one variable ``t``.

Coefficients are Python ints, so arithmetic is arbitrary precision and can
never wrap.  The representation is dense, lowest degree first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import PolynomialError

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        k = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) + other.coeff(i) for i in range(k))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolynomialError("negative exponent")
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, t: int) -> int:
        return self.eval(t)

    def eval(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def to_json(self) -> dict:
        return {"coeffs": [_json_int(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> IntPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(c) for c in obj["coeffs"])


def _json_int(c: int):
    return c if -_INT64_MAX - 1 <= c <= _INT64_MAX else str(c)


T = IntPoly([0, 1])


def render(p: IntPoly, var: str = "t") -> str:
    """Canonical text form, e.g. ``t^4 - 4*t^3 + 5*t^2 - 2*t``."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if a == 1 else f"{a}*{power}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def from_roots(roots: Iterable[int]) -> IntPoly:
    result = IntPoly([1])
    for r in roots:
        result = result * IntPoly([-r, 1])
    return result


def falling_factorial(n: int) -> IntPoly:
    """``t (t-1) ... (t-n+1)``."""
    return from_roots(range(n))


def interpolate(points: Sequence[tuple[int, int]]) -> IntPoly:
    """Unique polynomial of degree < len(points) through ``points``.

    Newton divided differences over exact rationals.  Raises
    ``PolynomialError`` if any coefficient is not an integer, which is how
    a miscounted sample shows up.
    """
    if not points:
        return IntPoly()
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise PolynomialError(f"repeated abscissa in {xs}")
    dd = [Fraction(y) for _, y in points]
    k = len(xs)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton form, kept as rational coefficients
    coeffs = [Fraction(0)] * k
    coeffs[0] = dd[k - 1]
    deg = 0
    for i in range(k - 2, -1, -1):
        # coeffs <- coeffs * (t - xs[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs[: deg + 1]
        for j in range(deg + 1):
            shifted[j] -= xs[i] * coeffs[j]
        deg += 1
        shifted[0] += dd[i]
        coeffs[: deg + 1] = shifted
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise PolynomialError(f"interpolant has non-integer coefficient {c}")
        out.append(int(c))
    return IntPoly(out)


class LogConcavity(NamedTuple):
    log_concave: bool
    alternating: bool


def log_concavity(p: IntPoly) -> LogConcavity:
    """Check |a_k|^2 >= |a_{k-1}| |a_{k+1}| and sign alternation.

    The sequence is read from the leading coefficient down to the constant
    term.  ``alternating`` holds when consecutive nonzero coefficients
    alternate in sign and every coefficient after the first zero is zero.
    """
    seq = list(reversed(p.coeffs))
    mags = [abs(c) for c in seq]
    concave = all(mags[k] ** 2 >= mags[k - 1] * mags[k + 1] for k in range(1, len(mags) - 1))
    alternating = True
    seen_zero = False
    for k, c in enumerate(seq):
        if c == 0:
            seen_zero = True
        elif seen_zero or (k and (c > 0) == (seq[k - 1] > 0)):
            alternating = False
            break
    return LogConcavity(concave, alternating)


def is_log_concave(p: IntPoly) -> bool:
    return log_concavity(p).log_concave
