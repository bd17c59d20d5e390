"""Exact coefficient fields: the rationals and simple extensions Q[s]/(m(s)).

Rationals are plain :class:`fractions.Fraction` values.  Extension elements are
:class:`Elem` instances that interoperate with ``int`` and ``Fraction``.
Univariate polynomials over Q used internally are lists of Fractions, lowest
degree first, with no trailing zeros (the zero polynomial is ``[]``).
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt


class ZeroDivisorError(ZeroDivisionError):
    """Inversion hit a zero divisor: the extension modulus is reducible.

    ``factor`` is the non-trivial monic factor of the modulus that was found.
    """

    def __init__(self, factor):
        super().__init__(f"modulus is reducible; factor {factor}")
        self.factor = factor


def to_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


# --- dense univariate polynomials over Q -------------------------------------

def utrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def uadd(p, q):
    n = max(len(p), len(q))
    return utrim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def usub(p, q):
    return uadd(p, [-c for c in q])


def umul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return utrim(out)


def udivmod(p, q):
    q = utrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = [Fraction(c) for c in utrim(p)]
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and p:
        c = p[-1] / lead
        k = len(p) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            p[i + k] -= c * b
        p = utrim(p)
    return utrim(quot), p


def umonic(p):
    p = utrim(p)
    if not p:
        return p
    lead = p[-1]
    return [Fraction(c) / lead for c in p]


def ugcd(p, q):
    p, q = utrim(p), utrim(q)
    while q:
        p, q = q, udivmod(p, q)[1]
    return umonic(p)


def uxgcd(p, q):
    """Return (g, s, t) with s*p + t*q = g, g monic (or zero)."""
    r0, r1 = utrim(p), utrim(q)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quo, rem = udivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, usub(s0, umul(quo, s1))
        t0, t1 = t1, usub(t0, umul(quo, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


def uderiv(p):
    return utrim([i * p[i] for i in range(1, len(p))])


def ueval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def usquarefree(p):
    """Squarefree part of p, monic."""
    p = umonic(p)
    if len(p) <= 2:
        return p
    g = ugcd(p, uderiv(p))
    return umonic(udivmod(p, g)[0])


def ustr(p, var="t") -> str:
    from .poly import format_coeff

    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        terms.append((c, mono))
    if not terms:
        return "0"
    out = []
    for k, (c, mono) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{format_coeff(a)}*{mono}"
        else:
            body = format_coeff(a)
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# --- rational roots -----------------------------------------------------------

def rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None."""
    x = to_rat(x)
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _icbrt(n: int):
    if n < 0:
        r = _icbrt(-n)
        return None if r is None else -r
    r = round(n ** (1 / 3)) if n < 2**52 else int(n ** (1 / 3))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**3 == n:
            return c
    # fall back to bisection for large n
    lo, hi = 0, 1
    while hi**3 < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**3 == n else None


def rational_cbrt(x: Fraction):
    """Exact real cube root of a rational, or None."""
    x = to_rat(x)
    n, d = _icbrt(x.numerator), _icbrt(x.denominator)
    if n is None or d is None:
        return None
    return Fraction(n, d)


# --- simple algebraic extensions ----------------------------------------------

class NumberField:
    """Q[s]/(modulus) for a monic squarefree modulus of degree >= 1.

    Irreducibility is not checked up front.  If an inversion meets a zero
    divisor, :class:`ZeroDivisorError` is raised with the factor found, so the
    caller can split the modulus and retry.
    """

    def __init__(self, modulus, name="s"):
        m = umonic([to_rat(c) for c in modulus])
        if len(m) < 2:
            raise ValueError("extension modulus must have degree >= 1")
        if len(ugcd(m, uderiv(m))) > 1:
            raise ValueError("extension modulus must be squarefree")
        self.modulus = tuple(m)
        self.degree = len(m) - 1
        self.name = name

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({ustr(list(self.modulus), self.name)})"

    def __call__(self, value) -> "Elem":
        if isinstance(value, Elem):
            if value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (list, tuple)):
            return Elem(self, self._reduce([to_rat(c) for c in value]))
        return Elem(self, self._reduce([to_rat(value)]))

    @property
    def gen(self) -> "Elem":
        return self([0, 1])

    def _reduce(self, p):
        p = utrim(p)
        if len(p) > self.degree:
            p = udivmod(p, list(self.modulus))[1]
        return tuple(p)


class Elem:
    """Element of a :class:`NumberField`, stored as a reduced coefficient tuple."""

    __slots__ = ("field", "c")

    def __init__(self, field: NumberField, coeffs):
        self.field = field
        self.c = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, Elem):
            if other.field != self.field:
                raise ValueError("mixed extension fields")
            return other
        if isinstance(other, (int, Fraction)):
            return Elem(self.field, (Fraction(other),) if other != 0 else ())
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Elem(self.field, tuple(uadd(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Elem(self.field, tuple(-x for x in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Elem(self.field, tuple(usub(self.c, o.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Elem(self.field, self.field._reduce(umul(list(self.c), list(o.c))))

    __rmul__ = __mul__

    def inverse(self) -> "Elem":
        if not self.c:
            raise ZeroDivisionError("division by zero in extension field")
        g, s, _ = uxgcd(list(self.c), list(self.field.modulus))
        if len(g) > 1:
            raise ZeroDivisorError(g)
        return Elem(self.field, self.field._reduce(s))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Elem(self.field, (Fraction(1),))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Elem):
            return NotImplemented
        return self.field == other.field and self.c == other.c

    def __hash__(self):
        if len(self.c) <= 1:
            return hash(self.c[0] if self.c else Fraction(0))
        return hash((self.field, self.c))

    def __bool__(self):
        return bool(self.c)

    def is_rational(self) -> bool:
        return len(self.c) <= 1

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.c[0] if self.c else Fraction(0)

    def __repr__(self):
        return f"({ustr(list(self.c), self.field.name)})"

    __str__ = __repr__
