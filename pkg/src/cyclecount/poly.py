"""Exact dense univariate polynomials over Python integers.

Coefficients are stored index-0-first with trailing zeros stripped, so the
zero polynomial is the empty tuple.  Rational arithmetic uses
:class:`fractions.Fraction` throughout; nothing in this module touches floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ParameterError


def _strip(coeffs: Sequence) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    """Immutable integer polynomial; ``Poly([0, 6, 11, 6, 1])`` is x^4+6x^3+11x^2+6x."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def dense(self, length: int | None = None) -> list[int]:
        """Coefficient list padded with zeros to ``length`` entries."""
        out = list(self.coeffs)
        if length is not None:
            out += [0] * (length - len(out))
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs])
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly.one()
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if k < 0:
            raise ParameterError("shift must be nonnegative")
        return Poly([0] * k + list(self.coeffs)) if self.coeffs else Poly()

    def div_x(self) -> "Poly":
        """Exact division by x."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ArithmeticError(f"{self} has nonzero constant term; not divisible by x")
        return Poly(self.coeffs[1:])

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x0):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    @property
    def support(self) -> tuple[int, int] | None:
        nz = [k for k, c in enumerate(self.coeffs) if c]
        return (nz[0], nz[-1]) if nz else None

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "Poly":
        return cls(int(s) for s in items)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and k) else str(mag)
            if k == 1:
                body += "x"
            elif k > 1:
                body += f"x^{k}"
            terms.append(("-" if c < 0 else "+") + body)
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


CyclePolynomial = Poly


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, int):
        return Poly([p])
    raise TypeError(f"cannot treat {type(p).__name__} as Poly")


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_shift(p: Poly, k: int) -> Poly:
    return p.shift(k)


def poly_div_x(p: Poly) -> Poly:
    return p.div_x()


def poly_product(factors: Iterable[Poly]) -> Poly:
    out = Poly.one()
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# integer sequences
# ---------------------------------------------------------------------------

def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever k < 0 or k > n (including negative n)."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: returns (F_n, F_{n+1})
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if n & 1 else (c, d)


def fib(n: int) -> int:
    """Fibonacci number with F_0 = 0, F_1 = F_2 = 1."""
    if n < 0:
        raise ParameterError(f"fib index must be nonnegative, got {n}")
    return _fib_pair(n)[0]


def lucas(n: int) -> int:
    """Lucas number with L_0 = 2, L_1 = 1, L_2 = 3."""
    if n < 0:
        raise ParameterError(f"lucas index must be nonnegative, got {n}")
    f, g = _fib_pair(n)
    return 2 * g - f


def harmonic(n: int, order: int = 1) -> Fraction:
    """H_n^{(order)} = sum_{i=1}^n 1/i^order; zero for n <= 0."""
    return sum((Fraction(1, i ** order) for i in range(1, n + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# special polynomial families
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def path_fib(m: int) -> Poly:
    """Cycle polynomial of P_m: sum_k C(k, m-k) x^k, with path_fib(0) = 1."""
    if m < 0:
        raise ParameterError(f"path_fib needs m >= 0, got {m}")
    return Poly(binomial(k, m - k) for k in range(m + 1))


def _cycle_matching_coeff(m: int, k: int) -> int:
    num = m * binomial(k, m - k)
    assert num % k == 0
    return num // k


@lru_cache(maxsize=None)
def cycle_matching(m: int) -> Poly:
    """Matching-only cycle polynomial: sum_{k>=2} (m/k) C(k, m-k) x^k; value L_m at 1."""
    if m < 3:
        raise ParameterError(f"cycle polynomials need m >= 3, got {m}")
    return Poly([0] + [_cycle_matching_coeff(m, k) for k in range(1, m + 1)])


@lru_cache(maxsize=None)
def cycle_full(m: int) -> Poly:
    """Cycle polynomial of C_m including the 2x Hamiltonian term."""
    return cycle_matching(m) + Poly([0, 2])


@lru_cache(maxsize=None)
def rising_factorial(r: int, n: int) -> Poly:
    """x^r (x+r)(x+r+1)...(x+n-1); r = 0 coincides with r = 1."""
    if r < 0 or n < r:
        raise ParameterError(f"rising_factorial needs 0 <= r <= n, got r={r}, n={n}")
    return poly_product(Poly([i, 1]) for i in range(r, n)).shift(r)


def special_poly(kind: str, *args: int) -> Poly:
    table = {
        "path_fib": path_fib,
        "cycle_full": cycle_full,
        "cycle_matching": cycle_matching,
        "rising_factorial": rising_factorial,
    }
    if kind not in table:
        raise ParameterError(f"unknown special polynomial {kind!r}")
    return table[kind](*args)


# ---------------------------------------------------------------------------
# evaluation and real roots
# ---------------------------------------------------------------------------

def eval_and_derivatives(p: Poly, x0) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (p(x0), p'(x0), p''(x0))."""
    x0 = Fraction(x0)
    d1 = p.derivative()
    return Fraction(p(x0)), Fraction(d1(x0)), Fraction(d1.derivative()(x0))


# Rational polynomials for Sturm chains are plain lists of Fractions,
# index-0-first and stripped; they never escape this module.

def _qstrip(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a.pop()
        _qstrip(a)
    return _qstrip(q), a


def _qmonic(a: list) -> list:
    return [c / a[-1] for c in a]


def _qgcd(a: list, b: list) -> list:
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return _qmonic(a)


def _qderiv(a: list) -> list:
    return _qstrip([k * c for k, c in enumerate(a)][1:])


def square_free_part(p: Poly) -> list[Fraction]:
    """p / gcd(p, p') as a monic rational coefficient list."""
    a = [Fraction(c) for c in p.coeffs]
    if not a:
        raise ParameterError("square-free part of the zero polynomial")
    g = _qgcd(a, _qderiv(a))
    return _qmonic(_qdivmod(a, g)[0])


def _sign_changes(values: Iterable) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


@dataclass(frozen=True)
class RootReport:
    real_rooted: bool
    distinct_real_roots: int
    square_free_degree: int


def sturm_real_rooted(p: Poly) -> RootReport:
    """Count distinct real roots of p's square-free part with a Sturm chain."""
    if not p:
        raise ParameterError("real-rootedness of the zero polynomial is undefined")
    q = square_free_part(p)
    chain = [q, _qderiv(q)]
    while chain[-1]:
        rem = _qdivmod(chain[-2], chain[-1])[1]
        chain.append([-c for c in rem])
    chain = [s for s in chain if s]
    at_pos_inf = [s[-1] for s in chain]
    at_neg_inf = [s[-1] * (-1) ** (len(s) - 1) for s in chain]
    count = _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)
    deg = len(q) - 1
    return RootReport(count == deg, count, deg)
