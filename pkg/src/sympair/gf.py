"""Exact arithmetic in prime and extension finite fields.

A :class:`Field` knows its characteristic, modulus and (lazily built)
exp/log tables.  Elements are represented by their *canonical integers*:
the value ``sum(c_i * p**i)`` of the coordinate vector ``(c_0, ..., c_{m-1})``
in the power basis of the modulus root.  All ``Field`` methods take and
return these plain integers, which is what the heavy enumeration machinery
works with; the :class:`Element` wrapper adds operator sugar on top for
interactive use and the demo scripts.

Extension fields GF(p^m) use the lexicographically smallest monic
irreducible modulus, where candidates are ordered by ascending canonical
value of their coefficient vector (little-endian base p).  This is
deterministic and cheap at desk scale, but *not* the Conway polynomial
convention, so canonical integers are not portable across systems.

Splitting fields needed to locate roots of x^n - 1 over a non-prime base
field are built as towers GF(q)[y]/(h(y)) with the same ascending-scan
modulus rule; their canonical integers coincide with the base-p flattening
of the nested coordinates.
"""

from __future__ import annotations

import functools
import math
from typing import Iterator

from .errors import (
    BadParameterError,
    DivisionByZeroError,
    FieldMismatchError,
    NoCubeRootError,
    NoSuchRootsError,
    NotPrimeError,
    OutOfScopeError,
)

#: Largest supported field order.  Keeps exp/log tables and scans cheap.
Q_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (fine for n < Q_LIMIT^2)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@functools.lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


class Field:
    """A finite field GF(p^m) with a fixed modulus and canonical-integer elements.

    Do not call the constructor directly; use :func:`prime_field`,
    :func:`extension_field`, or (for towers over a non-prime base)
    :func:`tower_field`.  Fields are immutable and hashable.
    """

    __slots__ = ("p", "q", "m", "base", "modulus", "_rel_deg", "_sub_q",
                 "_exp", "_log", "_gen", "_hash")

    def __init__(self, p: int, modulus: tuple[int, ...], base: "Field | None"):
        self.p = p
        self.base = base
        self.modulus = tuple(modulus)
        r = len(self.modulus) - 1
        self._rel_deg = r
        if base is None:
            self.q = p
            self.m = 1
            self._sub_q = p
        else:
            self.q = base.q ** r
            self.m = base.m * r
            self._sub_q = base.q
        if self.q > Q_LIMIT:
            raise OutOfScopeError(
                f"field order {self.q} exceeds the supported limit {Q_LIMIT}")
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._gen: int | None = None
        self._hash = hash((self.p, self.q, self.modulus, self.base))

    # ------------------------------------------------------------------
    # identity and housekeeping

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p == other.p and self.modulus == other.modulus
                and self.base == other.base)

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator["Element"]:
        return (Element(self, v) for v in range(self.q))

    @property
    def zero(self) -> "Element":
        return Element(self, 0)

    @property
    def one(self) -> "Element":
        return Element(self, 1)

    def element(self, value: int) -> "Element":
        """Wrap a canonical integer as an Element (validating its range)."""
        return Element(self, self.check(value))

    __call__ = element

    def check(self, a: int) -> int:
        """Validate a canonical integer and return it unchanged."""
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.q:
            raise BadParameterError(
                f"{a!r} is not a canonical element of {self!r} (expected int in [0, {self.q}))")
        return a

    def coords(self, a: int) -> tuple[int, ...]:
        """Base-p coordinates of a canonical integer, little-endian, length m."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coords(self, coords) -> int:
        value = 0
        for c in reversed(list(coords)):
            value = value * self.p + c % self.p
        return value

    def to_dict(self) -> dict:
        """Serializable identity {p, m, modulus} (prime-base fields only)."""
        if self.base is not None and self.base.base is not None:
            raise OutOfScopeError("tower fields are internal and do not serialize")
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    # ------------------------------------------------------------------
    # digit helpers for extensions (coordinates over the immediate base)

    def _vec(self, a: int) -> list[int]:
        bq = self._sub_q
        out = []
        for _ in range(self._rel_deg):
            out.append(a % bq)
            a //= bq
        return out

    def _unvec(self, vec) -> int:
        bq = self._sub_q
        value = 0
        for c in reversed(vec):
            value = value * bq + c
        return value

    # ------------------------------------------------------------------
    # arithmetic on canonical integers

    def add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.p
        bq = self._sub_q
        base = self.base
        out = 0
        mult = 1
        while a or b:
            out += base.add(a % bq, b % bq) * mult
            a //= bq
            b //= bq
            mult *= bq
        return out

    def neg(self, a: int) -> int:
        if self.base is None:
            return (-a) % self.p
        bq = self._sub_q
        base = self.base
        out = 0
        mult = 1
        while a:
            out += base.neg(a % bq) * mult
            a //= bq
            mult *= bq
        return out

    def sub(self, a: int, b: int) -> int:
        if self.base is None:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        """Table-free product: schoolbook over the base, reduced by the modulus."""
        if self.base is None:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        base = self.base
        r = self._rel_deg
        va = self._vec(a)
        vb = self._vec(b)
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(va):
            if ai:
                for j, bj in enumerate(vb):
                    if bj:
                        prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        mod = self.modulus
        for d in range(2 * r - 2, r - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for t in range(r):
                    if mod[t]:
                        prod[d - r + t] = base.sub(prod[d - r + t], base.mul(c, mod[t]))
        return self._unvec(prod[:r])

    def _ensure_tables(self) -> None:
        """Build exp/log tables for extension fields (prime fields never need them)."""
        if self._exp is not None or self.base is None:
            return
        qm1 = self.q - 1

        def raw_pow(a: int, e: int) -> int:
            result = 1
            while e:
                if e & 1:
                    result = self._mul_raw(result, a)
                a = self._mul_raw(a, a)
                e >>= 1
            return result

        gen = None
        for cand in range(1, self.q):
            if all(raw_pow(cand, qm1 // r) != 1 for r in prime_factors(qm1)):
                gen = cand
                break
        assert gen is not None, "multiplicative group of a finite field is cyclic"
        exp = [0] * qm1
        log = [0] * self.q
        acc = 1
        for i in range(qm1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_raw(acc, gen)
        assert acc == 1, "generator order mismatch"
        self._exp, self._log, self._gen = exp, log, gen

    def mul(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        self._ensure_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError(f"0 has no inverse in {self!r}")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        self._ensure_tables()
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.base is None:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        self._ensure_tables()
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZeroError("0 has no multiplicative order")
        o = self.q - 1
        for r in prime_factors(o):
            while o % r == 0 and self.pow(a, o // r) == 1:
                o //= r
        return o


class Element:
    """A field element: a canonical integer bound to its field, with operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = field.check(value)

    def _coerce(self, other: object) -> int:
        if isinstance(other, Element):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.add(self.value, v))

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.sub(self.value, v))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.mul(self.value, v))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.div(self.value, v))

    def __pow__(self, e: int):
        return Element(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return Element(self.field, self.field.neg(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field!r}:{self.value}"

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Base-p coordinates (little-endian, length m)."""
        return self.field.coords(self.value)

    def order(self) -> int:
        return self.field.order(self.value)

    def inverse(self) -> "Element":
        return Element(self.field, self.field.inv(self.value))


# ----------------------------------------------------------------------
# constructors

@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> Field:
    """GF(p) for prime p."""
    if not isinstance(p, int) or p < 2:
        raise BadParameterError(f"field characteristic must be an integer >= 2, got {p!r}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return Field(p, (0, 1), None)


@functools.lru_cache(maxsize=None)
def extension_field(p: int, m: int) -> Field:
    """GF(p^m) with the smallest monic irreducible modulus in canonical-value order."""
    if not isinstance(m, int) or m < 1:
        raise BadParameterError(f"extension degree must be a positive integer, got {m!r}")
    base = prime_field(p)
    if m == 1:
        return base
    if p ** m > Q_LIMIT:
        raise OutOfScopeError(f"field order {p**m} exceeds the supported limit {Q_LIMIT}")
    return Field(p, _scan_modulus(base, m), base)


@functools.lru_cache(maxsize=None)
def tower_field(base: Field, r: int) -> Field:
    """Degree-r extension of an arbitrary field, same ascending modulus scan.

    For a prime base this is exactly :func:`extension_field`.  Towers over
    non-prime bases are used internally as splitting fields for x^n - 1.
    """
    if r == 1:
        return base
    if base.base is None:
        return extension_field(base.p, r)
    if base.q ** r > Q_LIMIT:
        raise OutOfScopeError(
            f"splitting field order {base.q**r} exceeds the supported limit {Q_LIMIT}")
    return Field(base.p, _scan_modulus(base, r), base)


def _scan_modulus(base: Field, r: int) -> tuple[int, ...]:
    """First monic irreducible of degree r over ``base`` in ascending canonical value."""
    from . import poly  # deferred: poly imports this module at load time

    bq = base.q
    for value in range(bq ** r):
        coeffs = []
        v = value
        for _ in range(r):
            coeffs.append(v % bq)
            v //= bq
        coeffs.append(1)
        candidate = poly.Poly(base, coeffs)
        if poly.is_irreducible(candidate):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible of degree {r} over {base!r}")  # unreachable


# ----------------------------------------------------------------------
# distinguished elements

def primitive_element(field: Field) -> Element:
    """The smallest canonical element of multiplicative order q - 1."""
    if field._gen is not None:
        return Element(field, field._gen)
    if field.base is not None:
        field._ensure_tables()
        return Element(field, field._gen)
    qm1 = field.q - 1
    for cand in range(1, field.q):
        if all(field.pow(cand, qm1 // r) != 1 for r in prime_factors(qm1)):
            field._gen = cand
            return Element(field, cand)
    raise AssertionError("multiplicative group of a finite field is cyclic")  # unreachable


def nth_roots_of_unity(field: Field, n: int) -> list[Element]:
    """All n-th roots of unity, sorted by canonical value.

    Requires n | q - 1 (so the roots exist and are distinct); raises
    NoSuchRootsError otherwise.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParameterError(f"n must be a positive integer, got {n!r}")
    if (field.q - 1) % n != 0:
        raise NoSuchRootsError(
            f"{field!r} has no primitive {n}-th root of unity ({n} does not divide {field.q - 1})")
    g = primitive_element(field).value
    z = field.pow(g, (field.q - 1) // n)
    values = set()
    acc = 1
    for _ in range(n):
        values.add(acc)
        acc = field.mul(acc, z)
    assert len(values) == n
    return [Element(field, v) for v in sorted(values)]


def primitive_root_of_unity(field: Field, n: int) -> Element:
    """The smallest canonical element of multiplicative order exactly n.

    Candidates are g^{(q-1)/n * j} over j coprime to n, so the scan is
    O(n) table lookups rather than a walk over the whole field.
    """
    if (field.q - 1) % n != 0:
        raise NoSuchRootsError(
            f"{field!r} has no element of order {n} ({n} does not divide {field.q - 1})")
    g = primitive_element(field).value
    step = (field.q - 1) // n
    best = min(field.pow(g, step * j) for j in range(1, n + 1) if math.gcd(j, n) == 1)
    return Element(field, best)


def primitive_cube_root(p: int) -> Element:
    """The smallest nontrivial cube root of unity in GF(p); needs p = 1 mod 3."""
    field = prime_field(p)
    if (p - 1) % 3 != 0:
        raise NoCubeRootError(f"GF({p}) has no primitive cube root of unity (3 does not divide {p - 1})")
    for x in range(2, p):
        if pow(x, 3, p) == 1:
            return Element(field, x)
    raise AssertionError("unreachable: cube roots exist when 3 | p - 1")
