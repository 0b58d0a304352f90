"""Finite fields GF(p^k) in the polynomial basis.

Elements are coefficient tuples ``(c_0, ..., c_{k-1})`` over GF(p), lowest
degree first.  Every element also has an integer *index*
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``; ``FieldSpec.elements()`` lists the
elements in index order, which is the enumeration used everywhere a field
element has to be turned into a row or column number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import FieldDivisionByZero, NotPrimePower

Poly = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``p**k == q``, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Poly, m: Poly, p: int) -> list[int]:
    """Remainder of a modulo a monic polynomial m, coefficients mod p."""
    r = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * c) % p
        _trim(r)
    return r


def monic_polys(p: int, deg: int):
    """Monic polynomials of the given degree, smallest integer encoding first."""
    for low in range(p**deg):
        coeffs = [(low // p**i) % p for i in range(deg)]
        yield tuple(coeffs) + (1,)


def is_irreducible(m: Poly, p: int) -> bool:
    """Exhaustive test: no monic factor of degree 1..deg/2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in monic_polys(p, d):
            if not poly_mod(m, f, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    modulus: Poly  # monic, length k + 1, lowest degree first

    def __post_init__(self):
        if not is_prime(self.p) or self.k < 1:
            raise ValueError(f"bad field parameters p={self.p}, k={self.k}")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({self.p})")

    @property
    def order(self) -> int:
        return self.p**self.k

    def element(self, index: int) -> FieldElement:
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} out of range for GF({self.order})")
        coeffs = tuple((index // self.p**i) % self.p for i in range(self.k))
        return FieldElement(self, coeffs)

    @cached_property
    def _elements(self) -> tuple[FieldElement, ...]:
        return tuple(self.element(i) for i in range(self.order))

    def elements(self) -> tuple[FieldElement, ...]:
        return self._elements

    @property
    def zero(self) -> FieldElement:
        return self._elements[0]

    @property
    def one(self) -> FieldElement:
        return self._elements[1]

    def __str__(self) -> str:
        return f"GF({self.order})"


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.k or any(
            not 0 <= c < self.field.p for c in self.coeffs
        ):
            raise ValueError(f"non-canonical coefficients {self.coeffs}")

    @property
    def index(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def _check(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise ValueError("elements from different fields")

    def _make(self, coeffs) -> FieldElement:
        coeffs = list(coeffs)
        coeffs += [0] * (self.field.k - len(coeffs))
        return FieldElement(self.field, tuple(coeffs))

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return self._make((a + b) % p for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return self._make((-a) % p for a in self.coeffs)

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p, k = self.field.p, self.field.k
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % p
        return self._make(poly_mod(tuple(prod), self.field.modulus, p))

    def inverse(self) -> FieldElement:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not any(self.coeffs):
            raise FieldDivisionByZero(f"0 has no inverse in {self.field}")
        p = self.field.p
        # invariant: s_i * self == r_i  (mod modulus)
        r0, r1 = list(self.field.modulus), _trim(list(self.coeffs))
        s0, s1 = [0], [1]
        while len(r1) > 1:
            q, rem = _divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        c = pow(r1[0], -1, p)
        s = poly_mod(tuple(x * c for x in s1), self.field.modulus, p)
        return self._make(s)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"{self.field}[{self.index}]"


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)]) or [0]


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return _trim(q) or [0], a or [0]


def field_new(order: int) -> FieldSpec:
    """Build GF(order) with the smallest monic irreducible modulus.

    Polynomials are compared by their integer encoding (highest-degree
    coefficient most significant), so GF(8) gets x^3 + x + 1 and GF(9)
    gets x^2 + 1.
    """
    if order < 2:
        raise ValueError("field order must be at least 2")
    pk = prime_power(order)
    if pk is None:
        raise NotPrimePower(f"{order} is not a prime power")
    p, k = pk
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    modulus = next(m for m in monic_polys(p, k) if is_irreducible(m, p))
    return FieldSpec(p, k, modulus)


def arithmetic(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown field operation {op!r}")

