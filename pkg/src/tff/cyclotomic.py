"""Exact values in Q(zeta_infinity) extended by real radicals of rationals.

A ``CycValue`` is a finite sum of terms ``c * m * e(q)`` where ``c`` is
rational, ``m`` is a positive real radical ``prod p**f`` (0 < f < 1) and
``e(q) = exp(2 pi i q)`` for rational ``q`` taken mod 1.  Arithmetic stays in
this group-algebra form.  Only equality (and printing) needs a normal form:
square roots are rewritten as Gauss sums, the cyclotomic part is moved down
to its conductor n by Galois traces and written in the basis of Q(zeta_n)
obtained as the tensor product of the power bases of Q(zeta_{p^e}).
Radicals with exponents outside (1/2)Z are linearly independent over the
cyclotomic numbers, so they are kept as separate components.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import linalg

Radical = tuple[tuple[int, Fraction], ...]


# -- integer helpers ----------------------------------------------------------

@lru_cache(maxsize=None)
def factor(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError("factor() needs a positive integer")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _divisors(n: int) -> list[int]:
    return sorted(d for d in range(1, n + 1) if n % d == 0)


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factor(n):
        out = out // p * (p - 1)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for j, dj in enumerate(den):
            num[k + j] -= c * dj
    assert not any(num), "non-exact polynomial division"
    return out


def _legendre(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=None)
def sqrt_as_cyclotomic(p: int) -> tuple[tuple[Fraction, Fraction], ...]:
    """sqrt(p) for a prime p written as sum c * e(q) (quadratic Gauss sums)."""
    if p == 2:
        return ((Fraction(1, 8), Fraction(1)), (Fraction(7, 8), Fraction(1)))
    shift = Fraction(0) if p % 4 == 1 else Fraction(3, 4)  # divide by i when p = 3 mod 4
    return tuple(((Fraction(a, p) + shift) % 1, Fraction(_legendre(a, p))) for a in range(1, p))


# -- magnitudes -----------------------------------------------------------------

@dataclass(frozen=True)
class Magnitude:
    """Positive real ``prod p**e`` with rational exponents, kept factored."""

    exponents: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def of(cls, value, exponent=1) -> Magnitude:
        q = Fraction(value)
        if q <= 0:
            raise ValueError(f"magnitude must be positive, got {value}")
        e = Fraction(exponent)
        acc: dict[int, Fraction] = {}
        for p, k in factor(q.numerator):
            acc[p] = acc.get(p, Fraction(0)) + k * e
        for p, k in factor(q.denominator):
            acc[p] = acc.get(p, Fraction(0)) - k * e
        return cls._make(acc)

    @classmethod
    def _make(cls, acc: Mapping[int, Fraction]) -> Magnitude:
        return cls(tuple(sorted((p, Fraction(e)) for p, e in acc.items() if e != 0)))

    def __mul__(self, other: Magnitude) -> Magnitude:
        acc = dict(self.exponents)
        for p, e in other.exponents:
            acc[p] = acc.get(p, Fraction(0)) + e
        return Magnitude._make(acc)

    def __pow__(self, k) -> Magnitude:
        k = Fraction(k)
        return Magnitude._make({p: e * k for p, e in self.exponents})

    def inverse(self) -> Magnitude:
        return self ** -1

    @property
    def is_rational(self) -> bool:
        return all(e.denominator == 1 for _, e in self.exponents)

    def split(self) -> tuple[Fraction, Radical]:
        """(rational part, radical part with exponents in (0, 1))."""
        rat = Fraction(1)
        rad = []
        for p, e in self.exponents:
            fl = math.floor(e)
            rat *= Fraction(p) ** fl
            if e != fl:
                rad.append((p, e - fl))
        return rat, tuple(rad)

    def as_fraction(self) -> Fraction:
        rat, rad = self.split()
        if rad:
            raise ValueError(f"{self} is not rational")
        return rat

    def __float__(self):
        return math.prod(p ** float(e) for p, e in self.exponents)

    def __str__(self):
        if self.is_rational:
            return str(self.as_fraction())
        return "*".join(f"{p}^({e})" for p, e in self.exponents)


ONE_MAG = Magnitude()


def _radical_str(rad: Radical) -> str:
    return "*".join(f"{p}^({e})" for p, e in rad)


# -- values ---------------------------------------------------------------------

class CycValue:
    """Exact element of the cyclotomic-rational value field (see module docstring)."""

    __slots__ = ("_terms", "_canon")

    def __init__(self, terms: Mapping[tuple[Radical, Fraction], Fraction] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v != 0}
        self._canon = None

    # construction
    @classmethod
    def rational(cls, q) -> CycValue:
        return cls({((), Fraction(0)): Fraction(q)})

    @classmethod
    def root_of_unity(cls, phase) -> CycValue:
        return cls({((), Fraction(phase) % 1): Fraction(1)})

    @classmethod
    def monomial(cls, coeff=1, magnitude: Magnitude = ONE_MAG, phase=0) -> CycValue:
        rat, rad = magnitude.split()
        return cls({(rad, Fraction(phase) % 1): Fraction(coeff) * rat})

    @classmethod
    def coerce(cls, x) -> CycValue:
        if isinstance(x, CycValue):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot convert {type(x).__name__} to CycValue")

    # arithmetic
    def __add__(self, other) -> CycValue:
        other = CycValue.coerce(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return CycValue(out)

    __radd__ = __add__

    def __neg__(self) -> CycValue:
        return CycValue({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> CycValue:
        return self + (-CycValue.coerce(other))

    def __rsub__(self, other) -> CycValue:
        return CycValue.coerce(other) - self

    def __mul__(self, other) -> CycValue:
        other = CycValue.coerce(other)
        out: dict = {}
        for (r1, q1), c1 in self._terms.items():
            for (r2, q2), c2 in other._terms.items():
                rat, rad = _mul_radicals(r1, r2)
                key = (rad, (q1 + q2) % 1)
                out[key] = out.get(key, Fraction(0)) + c1 * c2 * rat
        return CycValue(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycValue:
        if k < 0:
            return self.inverse() ** (-k)
        out = CycValue.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> CycValue:
        """Multiplicative inverse; supported for monomials and radical-free values."""
        if not self._terms:
            raise ZeroDivisionError("inverse of zero")
        if len(self._terms) == 1:
            ((rad, q), c), = self._terms.items()
            mag = Magnitude._make({p: -e for p, e in rad})
            return CycValue.monomial(1 / c, mag, -q)
        if any(rad for rad, _ in self._terms):
            raise NotImplementedError("inverse of a sum with radical magnitudes")
        found = _descend({q: c for (_, q), c in self._terms.items()})
        if found is None:
            raise ZeroDivisionError("value is zero")
        n, red = found
        basis = _basis(n)
        x = dict(red)
        cols = []
        for b in basis:
            prod = _reduce({(k + b) % n: c for k, c in x.items()}, n)
            cols.append([prod.get(k, Fraction(0)) for k in basis])
        mat = [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]
        target = [Fraction(int(k == 0)) for k in basis]
        sol = linalg.solve(mat, target)
        return CycValue({((), Fraction(b, n)): c for b, c in zip(basis, sol)})

    # comparisons
    def canonical(self) -> tuple:
        """Normal form: sorted (radical key, conductor, power-basis coefficients) triples."""
        if self._canon is None:
            self._canon = _canonical(self._terms)
        return self._canon

    def __eq__(self, other):
        try:
            other = CycValue.coerce(other)
        except TypeError:
            return NotImplemented
        if self._terms == other._terms:
            return True
        return (self - other).canonical() == ()

    def __hash__(self):
        return hash(self.canonical())

    def __bool__(self):
        return self.canonical() != ()

    def is_rational(self) -> bool:
        c = self.canonical()
        return c == () or (len(c) == 1 and c[0][0] == () and c[0][1] == 1)

    def to_fraction(self) -> Fraction:
        c = self.canonical()
        if c == ():
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return c[0][2][0][1]

    def __complex__(self):
        total = 0j
        for (rad, q), c in self._terms.items():
            mag = math.prod(p ** float(e) for p, e in rad)
            total += float(c) * mag * cmath.exp(2j * math.pi * float(q))
        return total

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def canonical_terms(self) -> list[tuple[Fraction, Fraction, Radical]]:
        """(coefficient, phase, radical) in display order: phase denominator, then phase."""
        out = []
        for rad, d, coeffs in self.canonical():
            for k, c in coeffs:
                out.append((c, Fraction(k, d), rad))
        out.sort(key=lambda t: (t[2], t[1].denominator, t[1]))
        return out

    def __str__(self):
        terms = self.canonical_terms()
        if not terms:
            return "0"
        out = ""
        for k, (c, q, rad) in enumerate(terms):
            s = str(abs(c)) if k else str(c)
            if q:
                if abs(c) == 1:
                    s = s[:-1] + f"e({q})"
                else:
                    s += f"*e({q})"
            if rad:
                s += "*" + _radical_str(rad)
            out += s if k == 0 else (" - " if c < 0 else " + ") + s
        return out

    def __repr__(self):
        return f"CycValue({self})"

    def float_str(self, digits: int = 12) -> str:
        z = complex(self)
        re, im = round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0
        if im == 0:
            return repr(re)
        return f"{re!r}{'+' if im >= 0 else '-'}{abs(im)!r}j"


ZERO = CycValue()
ONE = CycValue.rational(1)


def cyc_sum(values: Iterable[CycValue]) -> CycValue:
    acc: dict = {}
    for v in values:
        for k, c in v._terms.items():
            acc[k] = acc.get(k, Fraction(0)) + c
    return CycValue(acc)


def _mul_radicals(r1: Radical, r2: Radical) -> tuple[Fraction, Radical]:
    if not r1:
        return Fraction(1), r2
    if not r2:
        return Fraction(1), r1
    acc = dict(r1)
    for p, e in r2:
        acc[p] = acc.get(p, Fraction(0)) + e
    return Magnitude._make(acc).split()


def _conductor_bound(phases: Iterable[Fraction]) -> int:
    n = 1
    for q in phases:
        n = math.lcm(n, Fraction(q).denominator)
    return n


def _canonical(terms: Mapping[tuple[Radical, Fraction], Fraction]) -> tuple:
    # split radicals into a (1/2)Z part, turned into Gauss sums, and the rest
    groups: dict[Radical, dict[Fraction, Fraction]] = {}
    for (rad, q), c in terms.items():
        key = []
        sqrt_primes = []
        for p, e in rad:
            h = e % Fraction(1, 2)
            if h:
                key.append((p, h))
            if e - h:
                sqrt_primes.append(p)
        acc = {q: c}
        for p in sqrt_primes:
            nxt: dict[Fraction, Fraction] = {}
            for q1, c1 in acc.items():
                for q2, c2 in sqrt_as_cyclotomic(p):
                    k = (q1 + q2) % 1
                    nxt[k] = nxt.get(k, Fraction(0)) + c1 * c2
            acc = nxt
        g = groups.setdefault(tuple(key), {})
        for q1, c1 in acc.items():
            g[q1] = g.get(q1, Fraction(0)) + c1
    out = []
    for key in sorted(groups):
        red = _reduce_element(groups[key])
        if red is not None:
            out.append((key,) + red)
    return tuple(out)


def _reduce_element(coeffs: Mapping[Fraction, Fraction]) -> tuple[int, tuple] | None:
    found = _descend(coeffs)
    if found is None:
        return None
    n, red = found
    return n, tuple(sorted(red.items()))


@lru_cache(maxsize=None)
def _prime_powers(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """(p, p^(e-1), q = p^e, b) for each prime power q exactly dividing n.

    e(k/n) = prod_q e(k b_q / q) with b_q = (n/q)^(-1) mod q; the digit of
    k at q is k b_q mod q.
    """
    out = []
    for p, e in factor(n):
        q = p**e
        out.append((p, q // p, q, pow(n // q, -1, q)))
    return tuple(out)


def _bad_digit(k: int, p: int, low: int, q: int, b: int) -> bool:
    return (k * b % q) // low == p - 1


def _reduce(coeffs: Mapping[int, Fraction], n: int) -> dict[int, Fraction]:
    """Coordinates of sum c_k e(k/n) in the basis of exponents with no digit in the top block.

    In Q(zeta_q), q = p^e, the relation sum_j zeta^{r + j p^(e-1)} = 0
    rewrites a digit r + (p-1) p^(e-1) in one step.  Q(zeta_n) is the
    tensor product of its prime-power parts, so digits reduce independently;
    lowering the q-digit by t p^(e-1) is k -> k - t p^(e-1) n/q.
    """
    cur = {k % n: Fraction(c) for k, c in coeffs.items() if c}
    for p, low, q, b in _prime_powers(n):
        unit = low * (n // q)
        nxt: dict[int, Fraction] = {}
        for k, c in cur.items():
            if _bad_digit(k, p, low, q, b):
                for j in range(p - 1):
                    k2 = (k - (p - 1 - j) * unit) % n
                    nxt[k2] = nxt.get(k2, Fraction(0)) - c
            else:
                nxt[k] = nxt.get(k, Fraction(0)) + c
        cur = {k: c for k, c in nxt.items() if c}
    return cur


@lru_cache(maxsize=None)
def _basis(n: int) -> tuple[int, ...]:
    pp = _prime_powers(n)
    return tuple(k for k in range(n) if not any(_bad_digit(k, *x) for x in pp))


def _trace_down(x: Mapping[int, Fraction], n: int, p: int) -> dict[int, Fraction]:
    """Tr_{Q(zeta_n)/Q(zeta_m)}(x) / [Q(zeta_n):Q(zeta_m)] for m = n / p, on exponents mod m."""
    m = n // p
    out: dict[int, Fraction] = {}
    if m % p == 0:
        for k, c in x.items():
            if k % p == 0:
                out[k // p] = out.get(k // p, Fraction(0)) + c
        return out
    # 1 = b_m p + b_p m, so e(k/n) = e(k b_m / m) e(k b_p / p)
    b_m = pow(p, -1, m) if m > 1 else 0
    b_p = (1 - b_m * p) // m
    other = Fraction(-1, p - 1)
    for k, c in x.items():
        u = k * b_m % m
        v = k * b_p % p
        out[u] = out.get(u, Fraction(0)) + (c if v == 0 else c * other)
    return out


def _descend(coeffs: Mapping[Fraction, Fraction]) -> tuple[int, dict[int, Fraction]] | None:
    """(conductor n, reduced coordinates over Z/n), or None for zero."""
    coeffs = {Fraction(q) % 1: c for q, c in coeffs.items() if c}
    n = _conductor_bound(coeffs)
    red = _reduce({int(q * n): c for q, c in coeffs.items()}, n)
    while red:
        for p, _ in factor(n):
            y = _trace_down(red, n, p)
            if _reduce({k * p: c for k, c in y.items()}, n) == red:
                n //= p
                red = _reduce(y, n)
                break
        else:
            return n, red
    return None
