"""
Exact arithmetic in GF(p^k) for small prime powers.

Elements are dense coefficient vectors (low degree first) reduced modulo a
monic irreducible polynomial.  The modulus is the lexicographically smallest
monic irreducible polynomial of degree k, so the same (p, k) always yields the
same field, element encoding and therefore the same projective plane.

Elements can also be addressed by their integer code
``sum(c_i * p**i)``; the code order is the order used for plane coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import DivisionByZero, NotPrime, NotPrimePower, TooLarge

MAX_ORDER = 1 << 16


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q == p**k, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, k


# -- polynomials over GF(p), coefficient lists low-to-high -------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m over GF(p)."""
    a = _trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        a = _trim(a)
    return a


def _monic_polys(p, degree):
    for low in product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(poly) - 1
    if k < 1 or poly[-1] != 1:
        return False
    for d in range(1, k // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for poly in _monic_polys(p, k):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


@dataclass(frozen=True)
class FieldElem:
    """An element of ``field``; ``coeffs`` has length k, entries in [0, p)."""

    field: "FiniteField"
    coeffs: tuple[int, ...]

    def __int__(self):
        return self.field.encode(self)

    def __index__(self):
        return self.field.encode(self)

    def __add__(self, other):
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.add(self, self.field.neg(other))

    def __mul__(self, other):
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, e):
        return self.field.pow(self, e)

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(other))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"GF({self.field.order})[{int(self)}]"


@dataclass(frozen=True)
class FiniteField:
    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.k

    # -- element conversion ------------------------------------------------

    def elem(self, x) -> FieldElem:
        """Coerce an int code, coefficient sequence or FieldElem to an element."""
        if isinstance(x, FieldElem):
            if x.field != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, int):
            if not 0 <= x < self.order:
                raise ValueError(f"{x} is not an element code of GF({self.order})")
            digits = []
            for _ in range(self.k):
                x, r = divmod(x, self.p)
                digits.append(r)
            return FieldElem(self, tuple(digits))
        coeffs = tuple(int(c) % self.p for c in x)
        if len(coeffs) > self.k:
            coeffs = tuple(_poly_mod(coeffs, self.modulus, self.p))
        return FieldElem(self, coeffs + (0,) * (self.k - len(coeffs)))

    def encode(self, a: FieldElem) -> int:
        return sum(c * self.p**i for i, c in enumerate(a.coeffs))

    @cached_property
    def zero(self) -> FieldElem:
        return self.elem(0)

    @cached_property
    def one(self) -> FieldElem:
        return self.elem(1)

    def elements(self) -> list[FieldElem]:
        return [self.elem(i) for i in range(self.order)]

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b) -> FieldElem:
        a, b = self.elem(a), self.elem(b)
        return FieldElem(self, tuple((x + y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a) -> FieldElem:
        a = self.elem(a)
        return FieldElem(self, tuple(-x % self.p for x in a.coeffs))

    def mul(self, a, b) -> FieldElem:
        a, b = self.elem(a), self.elem(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    prod[i + j] += x * y
        return self.elem(_poly_mod([c % self.p for c in prod], self.modulus, self.p))

    def pow(self, a, e: int) -> FieldElem:
        a = self.elem(a)
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a) -> FieldElem:
        a = self.elem(a)
        if not a:
            raise DivisionByZero("inverse of zero")
        # the multiplicative group has order p^k - 1
        return self.pow(a, self.order - 2)

    def arith(self, op: str, a, b=None) -> FieldElem:
        if op == "add":
            return self.add(a, b)
        if op == "mul":
            return self.mul(a, b)
        if op == "neg":
            return self.neg(a)
        if op == "inv":
            return self.inv(a)
        if op == "pow":
            return self.pow(a, int(b))
        raise ValueError(f"unknown field operation {op!r}")

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"


def field_make(p: int, k: int = 1) -> FiniteField:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    if p**k > MAX_ORDER:
        raise TooLarge(f"{p}^{k} exceeds the supported field order {MAX_ORDER}")
    return FiniteField(p, k, smallest_irreducible(p, k))


def field_of_order(q: int) -> FiniteField:
    p, k = prime_power(q)
    return field_make(p, k)
