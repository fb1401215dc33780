"""Exact rational arithmetic and dense univariate polynomials over Q and GF(p).

Rationals are :class:`fractions.Fraction`. Polynomials store coefficients
constant-term first, so ``PolyQ([6, -3, -12, 4])`` is ``4t^3 - 12t^2 - 3t + 6``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class BadPrime(ValueError):
    """Prime divides a denominator or the leading numerator."""


def to_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _strip(coeffs: Sequence) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class PolyQ:
    """Dense polynomial with rational coefficients (index i = coefficient of t**i)."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _strip([to_rational(c) for c in coeffs]))

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "PolyQ":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        return poly_eval(self, x)

    def __add__(self, other: "PolyQ") -> "PolyQ":
        n = max(len(self), len(other))
        return PolyQ([self[i] + other[i] for i in range(n)])

    def __neg__(self) -> "PolyQ":
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other) -> "PolyQ":
        if not isinstance(other, PolyQ):
            c = to_rational(other)
            return PolyQ([c * a for a in self.coeffs])
        if not self or not other:
            return PolyQ()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return poly_divmod(self, other)[1]

    def __pow__(self, n: int) -> "PolyQ":
        out, base = PolyQ([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_square(self) -> "PolyQ":
        """Return f(t**2)."""
        out = []
        for c in self.coeffs:
            out.extend([c, 0])
        return PolyQ(out)

    def monic(self) -> "PolyQ":
        if not self:
            return self
        return self * (1 / self.lc)

    def to_text(self) -> str:
        """Comma-separated coefficient list, constant term first."""
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "" if (mag == 1 and i) else str(mag)
            if i and mag.denominator != 1:
                body = f"({body})"
            if i == 1:
                body += "t"
            elif i > 1:
                body += f"t^{i}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def parse_poly(text: str) -> PolyQ:
    """Parse "6,-3,-12,4" (constant first, "num/den" allowed) into a PolyQ."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed polynomial {text!r}")
    return PolyQ(Fraction(p) for p in parts)


def poly_eval(f: PolyQ, x):
    """Horner evaluation; exact when ``x`` is a Fraction or int."""
    acc = 0 * x
    for c in reversed(f.coeffs):
        acc = acc * x + (c if isinstance(x, (int, Fraction)) else type(x)(c))
    return acc


def poly_divmod(f: PolyQ, g: PolyQ) -> tuple[PolyQ, PolyQ]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = g.degree
    inv = 1 / g.lc
    if len(rem) - 1 < dg:
        return PolyQ(), f
    quot = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        q = rem[k + dg] * inv
        quot[k] = q
        if q:
            for j, b in enumerate(g.coeffs):
                rem[k + j] -= q * b
    return PolyQ(quot), PolyQ(rem[:dg])


def poly_gcd(f: PolyQ, g: PolyQ) -> PolyQ:
    """Monic gcd over Q (plain Euclid; fine at the degrees used here)."""
    while g:
        f, g = g, f % g
    return f.monic()


# -- integer helpers -----------------------------------------------------------

def content(coeffs: Sequence[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def primitive_part(f: PolyQ) -> tuple[Fraction, list[int]]:
    """Split ``f = c * F`` with F integral, primitive and positive leading coefficient."""
    if not f:
        return Fraction(0), []
    den = lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    cont = content(ints)
    if ints[-1] < 0:
        cont = -cont
    return Fraction(cont, den), [c // cont for c in ints]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)**(deg a - deg b + 1) * a mod b over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        r = list(_strip(r))
        e -= 1
    q = lb ** e
    return [q * c for c in r]


def _resultant_int(a: list[int], b: list[int]) -> int:
    # Subresultant PRS over Z (Collins); all divisions below are exact.
    if not a or not b:
        return 0
    ca, cb = content(a), content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            s = -1
    g = h = 1
    while len(b) > 1:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        div = g * h ** delta
        b = [c // div for c in r]
        g = a[-1]
        h = g ** delta // h ** (delta - 1) if delta else h
    da = len(a) - 1
    h = b[-1] ** da // h ** (da - 1)
    return s * t * h


def resultant(f: PolyQ, g: PolyQ) -> Fraction:
    """Res(f, g) = lc(f)**deg(g) * prod g(alpha_i) over the roots alpha_i of f."""
    if not f or not g:
        return Fraction(0)
    cf, F = primitive_part(f)
    cg, G = primitive_part(g)
    return cf ** g.degree * cg ** f.degree * _resultant_int(F, G)


def discriminant(f: PolyQ) -> Fraction:
    """(-1)**(n(n-1)/2) * Res(f, f') / lc(f); t^2 - 2 gives 8."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def is_square(x: RationalLike) -> bool:
    x = to_rational(x)
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


# -- primes --------------------------------------------------------------------

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


# -- GF(p)[t] ------------------------------------------------------------------

@dataclass(frozen=True)
class PolyModP:
    """Dense polynomial over GF(p), residues in [0, p)."""

    modulus: int
    coeffs: tuple[int, ...]

    def __init__(self, modulus: int, coeffs: Iterable[int] = (), *, check_prime: bool = True):
        if check_prime and not is_prime(modulus):
            raise ValueError(f"{modulus} is not prime")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", _strip([c % modulus for c in coeffs]))

    def _new(self, coeffs) -> "PolyModP":
        return PolyModP(self.modulus, coeffs, check_prime=False)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def monic(self) -> "PolyModP":
        if not self.coeffs:
            return self
        inv = pow(self.coeffs[-1], -1, self.modulus)
        return self._new(c * inv for c in self.coeffs)

    def derivative(self) -> "PolyModP":
        return self._new([i * c for i, c in enumerate(self.coeffs)][1:])

    def __sub__(self, other: "PolyModP") -> "PolyModP":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return self._new(x - y for x, y in zip(a, b))

    def __mul__(self, other: "PolyModP") -> "PolyModP":
        return self._new(gf_mul(self.coeffs, other.coeffs, self.modulus))

    def __mod__(self, other: "PolyModP") -> "PolyModP":
        return self._new(gf_rem(self.coeffs, other.coeffs, self.modulus))

    def __floordiv__(self, other: "PolyModP") -> "PolyModP":
        return self._new(gf_divmod(self.coeffs, other.coeffs, self.modulus)[0])

    def gcd(self, other: "PolyModP") -> "PolyModP":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, m: "PolyModP") -> "PolyModP":
        return self._new(gf_powmod(self.coeffs, e, m.coeffs, self.modulus))


def gf_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % p for c in out]


def gf_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    b = list(_strip(list(b)))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [c % p for c in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) - 1 < db:
        return [], list(_strip(r))
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] = (r[k + j] - c * y) % p
    return q, list(_strip(r[:db]))


def gf_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return gf_divmod(a, b, p)[1]


def gf_powmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    out = [1]
    base = gf_rem(base, m, p)
    while e:
        if e & 1:
            out = gf_rem(gf_mul(out, base, p), m, p)
        base = gf_rem(gf_mul(base, base, p), m, p)
        e >>= 1
    return gf_rem(out, m, p)


def reduce_mod_p(f: PolyQ, p: int) -> PolyModP:
    """Coefficientwise reduction; raises BadPrime if p divides a denominator or lc's numerator."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise BadPrime(f"{p} divides a coefficient denominator")
    if f and f.lc.numerator % p == 0:
        raise BadPrime(f"{p} divides the leading coefficient")
    return PolyModP(p, (c.numerator * pow(c.denominator, -1, p) for c in f.coeffs), check_prime=False)
