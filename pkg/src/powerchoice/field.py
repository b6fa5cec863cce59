"""Arithmetic in GF(p^e).

Elements are polynomials over GF(p) of degree < e, stored as little-endian
coefficient tuples.  Each element also has a canonical integer index
``sum(c_i * p**i)`` which is what every file format uses.
"""

from __future__ import annotations

import itertools

MAX_ORDER = 1 << 16


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class SizeExceeded(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e``, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


# -- polynomials over GF(p), little-endian coefficient lists -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, m, p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m over GF(p)."""
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, in canonical-index order."""
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(m, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in monic_polys(p, d):
            if not poly_mod(list(m), f, p):
                return False
    return True


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e with the smallest canonical index."""
    # monic_polys yields in increasing sum(c_i p^i), i.e. compared from the top coefficient down
    for m in monic_polys(p, e):
        if is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


class FiniteField:
    """The field GF(p^e) with a deterministically chosen modulus.

    >>> F = FiniteField(2, 2)
    >>> x = F(2)
    >>> (x * x).index
    3
    """

    def __init__(self, p: int, e: int = 1):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        if p**e > MAX_ORDER:
            raise SizeExceeded(f"GF({p}^{e}) exceeds the order guard {MAX_ORDER}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = (0, 1) if e == 1 else least_irreducible(p, e)
        assert is_irreducible(self.modulus, p)

    @classmethod
    def of_order(cls, q: int) -> "FiniteField":
        pe = prime_power(q)
        if pe is None:
            raise NotPrime(f"{q} is not a prime power")
        return cls(*pe)

    def __repr__(self):
        return f"FiniteField(p={self.p}, e={self.e})"

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __len__(self):
        return self.q

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"index {value} out of range for GF({self.q})")
            return FieldElement(self, self.to_coeffs(value))
        coeffs = tuple(value)
        if len(coeffs) != self.e or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"bad coefficient vector {coeffs!r}")
        return FieldElement(self, coeffs)

    def to_coeffs(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            index, c = divmod(index, self.p)
            out.append(c)
        return tuple(out)

    def to_index(self, coeffs) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def elements(self) -> list["FieldElement"]:
        return [self(i) for i in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    def _reduce(self, coeffs) -> tuple[int, ...]:
        r = poly_mod(coeffs, self.modulus, self.p)
        return tuple(r) + (0,) * (self.e - len(r))


class FieldElement:
    __slots__ = ("field", "coeffs", "index")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs
        self.index = field.to_index(coeffs)

    def __int__(self):
        return self.index

    def __repr__(self):
        return f"GF({self.field.q})[{self.index}]"

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine a field element with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self!r} and {other!r} live in different fields")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.field.p
        prod = [0] * (2 * self.field.e - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return FieldElement(self.field, self.field._reduce([c % p for c in prod]))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("0 has no multiplicative inverse")
        # the multiplicative group has order q - 1
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()
