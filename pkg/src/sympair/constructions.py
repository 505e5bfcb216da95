"""Constructors for four families of MDS symbol-pair cyclic codes, plus a
small-parameter search for pair-Singleton-optimal cyclic codes.

Families (all cyclic, i.e. lambda = 1):

* ``mds_3p_7``  — g = (x-1)^3 (x^2+x+1) over GF(p), p >= 5 prime:
  [3p, 3p-5, 4] with pair distance 7.
* ``mds_3p_8``  — g = (x-1)^3 (x-w)^2 (x-w^2) over GF(p), p = 1 mod 3,
  w a primitive cube root of unity: [3p, 3p-6, 4] with pair distance 8.
* ``mds_3p_6``  — g = (x-1)(x^3-1) over GF(p), p >= 5 prime:
  [3p, 3p-4, 3] with pair distance 6.
* ``mds_n_6``   — defining set C_0 u C_1 u C_{q+1} mod n for n | q^2 - 1,
  n >= q + 4: [n, n-4, 4] with pair distance 6.

Constructors verify their output rather than trusting the formulas: the
``certify`` level controls how much enumeration that takes (see
``ConstructionResult``).  Checks that must hold by construction are plain
asserts; violated *input* preconditions raise BadParameterError.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gf, poly
from .code import (
    ConstacyclicCode,
    DistanceResult,
    min_hamming_distance,
    min_pair_distance,
)
from .errors import BadParameterError, BudgetExceededError

#: Certification levels, cheapest first.
CERTIFY_LEVELS = ("bounds", "hamming", "full")


@dataclass(frozen=True)
class FamilySpec:
    """A family instance's identity and its expected parameters."""

    family: str          # "MDS_3P_7" | "MDS_3P_8" | "MDS_3P_6" | "MDS_N_6"
    parameters: dict     # {"p": ...} or {"q": ..., "n": ...}
    expected_n: int
    expected_k: int
    expected_d_hamming: int
    expected_d_pair: int

    def __post_init__(self):
        # every family meets the pair-Singleton bound with equality and
        # sits inside the sandwich d_H + 1 <= d_p <= 2 d_H
        assert self.expected_k == self.expected_n - self.expected_d_pair + 2
        assert self.expected_d_hamming + 1 <= self.expected_d_pair <= 2 * self.expected_d_hamming

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "parameters": dict(self.parameters),
            "expected_n": self.expected_n,
            "expected_k": self.expected_k,
            "expected_d_hamming": self.expected_d_hamming,
            "expected_d_pair": self.expected_d_pair,
        }


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed code with whatever certification was requested.

    certify="bounds"  — structural checks plus whatever is free: the 3p
                        families get d_H from the repeated-root product
                        formula; mds_n_6 gets the Hartmann-Tzeng check only.
    certify="hamming" — d_hamming certified exactly (default).
    certify="full"    — d_pair certified exactly as well.
    """

    code: ConstacyclicCode
    family: FamilySpec
    d_hamming: DistanceResult | None
    d_pair: DistanceResult | None

    @property
    def is_mds_pair(self) -> bool | None:
        """True/False once d_pair is certified; None when it was not computed."""
        if self.d_pair is None:
            return None
        return (self.d_pair.certified
                and self.code.k == self.code.n - self.d_pair.value + 2)


def _require_certify(certify: str) -> None:
    if certify not in CERTIFY_LEVELS:
        raise BadParameterError(f"certify must be one of {CERTIFY_LEVELS}, got {certify!r}")


def _require_odd_prime_at_least(p, minimum: int) -> None:
    if not isinstance(p, int) or not gf.is_prime(p):
        raise BadParameterError(f"p must be prime, got {p!r}")
    if p < minimum:
        raise BadParameterError(f"p must be at least {minimum}, got {p}")


def _certified(code: ConstacyclicCode, spec: FamilySpec, certify: str,
               budget: int | None, jobs: int) -> ConstructionResult:
    """Run the requested enumeration and check it against the expectations."""
    d_h = d_p = None
    if certify in ("hamming", "full") or code.n % code.field.p == 0:
        # the repeated-root families certify d_H for free via the product
        # formula, so the "bounds" level gets it too
        d_h = min_hamming_distance(code, "auto", budget=budget, jobs=jobs)
        assert d_h.certified and d_h.value == spec.expected_d_hamming
    if certify == "full":
        d_p = min_pair_distance(code, "auto", budget=budget, jobs=jobs)
        assert d_p.certified and d_p.value == spec.expected_d_pair
    return ConstructionResult(code=code, family=spec, d_hamming=d_h, d_pair=d_p)


def mds_3p_7(p: int, certify: str = "hamming", *, budget: int | None = None,
             jobs: int = 1) -> ConstructionResult:
    """[3p, 3p-5, 4] cyclic code over GF(p) with pair distance 7, p >= 5 prime."""
    _require_certify(certify)
    _require_odd_prime_at_least(p, 5)
    field = gf.prime_field(p)
    x = poly.Poly.x(field)
    one = poly.Poly.one(field)
    g = (x - one) ** 3 * poly.Poly(field, (1, 1, 1))
    code = ConstacyclicCode(field, 3 * p, 1, g)
    spec = FamilySpec("MDS_3P_7", {"p": p}, 3 * p, 3 * p - 5, 4, 7)
    return _certified(code, spec, certify, budget, jobs)


def mds_3p_8(p: int, certify: str = "hamming", *, budget: int | None = None,
             jobs: int = 1) -> ConstructionResult:
    """[3p, 3p-6, 4] cyclic code over GF(p) with pair distance 8, p = 1 mod 3."""
    _require_certify(certify)
    _require_odd_prime_at_least(p, 5)
    if p % 3 != 1:
        raise BadParameterError(f"p must be 1 mod 3 so cube roots of unity exist, got {p}")
    field = gf.prime_field(p)
    omega = gf.primitive_cube_root(p).value
    x = poly.Poly.x(field)
    one = poly.Poly.one(field)
    g = ((x - one) ** 3
         * (x - poly.Poly(field, (omega,))) ** 2
         * (x - poly.Poly(field, (field.mul(omega, omega),))))
    code = ConstacyclicCode(field, 3 * p, 1, g)
    spec = FamilySpec("MDS_3P_8", {"p": p}, 3 * p, 3 * p - 6, 4, 8)
    return _certified(code, spec, certify, budget, jobs)


def mds_3p_6(p: int, certify: str = "hamming", *, budget: int | None = None,
             jobs: int = 1) -> ConstructionResult:
    """[3p, 3p-4, 3] cyclic code over GF(p) with pair distance 6, p >= 5 prime."""
    _require_certify(certify)
    _require_odd_prime_at_least(p, 5)
    field = gf.prime_field(p)
    x = poly.Poly.x(field)
    one = poly.Poly.one(field)
    g = (x - one) * poly.binomial(field, 3, 1)
    code = ConstacyclicCode(field, 3 * p, 1, g)
    spec = FamilySpec("MDS_3P_6", {"p": p}, 3 * p, 3 * p - 4, 3, 6)
    return _certified(code, spec, certify, budget, jobs)


def mds_n_6(q: int, n: int, certify: str = "hamming", *, budget: int | None = None,
            jobs: int = 1) -> ConstructionResult:
    """[n, n-4, 4] cyclic code over GF(q) with pair distance 6, from the
    defining set C_0 u C_1 u C_{q+1} mod n, where n | q^2 - 1 and n >= q + 4."""
    _require_certify(certify)
    if not isinstance(q, int) or q < 3:
        raise BadParameterError(f"q must be a prime power >= 3, got {q!r}")
    ps = gf.prime_factors(q)
    if len(ps) != 1:
        raise BadParameterError(f"q must be a prime power, got {q} = {' * '.join(map(str, ps))} * ...")
    if not isinstance(n, int) or n < 2 or (q * q - 1) % n != 0:
        raise BadParameterError(f"n must divide q^2 - 1 = {q * q - 1}, got {n!r}")
    if n < q + 4:
        raise BadParameterError(f"n must be at least q + 4 = {q + 4}, got {n}")
    field = _field_of_order(q)
    c0 = poly.cyclotomic_coset(n, q, 0)
    c1 = poly.cyclotomic_coset(n, q, 1)
    cq1 = poly.cyclotomic_coset(n, q, q + 1)
    # n >= q + 4 forces these sizes, which in turn force k = n - 4
    assert len(c1) == 2 and len(cq1) == 1
    defining = sorted(set(c0.members) | set(c1.members) | set(cq1.members))
    code = ConstacyclicCode.from_defining_set(field, n, defining)
    spec = FamilySpec("MDS_N_6", {"q": q, "n": n}, n, n - 4, 4, 6)
    assert code.k == spec.expected_k
    from .bounds import hartmann_tzeng_bound
    assert hartmann_tzeng_bound(defining, n, q) >= spec.expected_d_hamming
    return _certified(code, spec, certify, budget, jobs)


def _field_of_order(q: int) -> gf.Field:
    if q < 2 or len(gf.prime_factors(q)) != 1:
        raise BadParameterError(f"q must be a prime power >= 2, got {q}")
    (p,) = gf.prime_factors(q)
    m = 0
    r = q
    while r > 1:
        r //= p
        m += 1
    return gf.extension_field(p, m)


# ----------------------------------------------------------------------
# small-parameter search

@dataclass(frozen=True)
class SearchEntry:
    """One cyclic code examined by ``search_optimal_cyclic``."""

    code: ConstacyclicCode
    d_hamming: DistanceResult
    d_pair: DistanceResult

    @property
    def is_mds_pair(self) -> bool:
        return (self.d_pair.certified
                and self.code.k == self.code.n - self.d_pair.value + 2)


def search_optimal_cyclic(q: int, n: int, max_codes: int | None = None,
                          budget: int | None = None, *, jobs: int = 1,
                          seed: int = 0) -> list[SearchEntry]:
    """Certified (d_H, d_p) for every nontrivial cyclic code of length n over
    GF(q), flagging codes that meet the pair-Singleton bound with equality.

    Generators are enumerated through the multiplicity lattice of the
    factorization of x^n - 1, in lexicographic order over the factor list
    (factors sorted by degree, then coefficients), skipping k in {0, n}.
    ``budget`` caps total encodings across the whole search; running out
    raises BudgetExceededError with the finished entries attached.
    """
    if max_codes is not None and max_codes < 1:
        raise BadParameterError(f"max_codes must be positive when given, got {max_codes!r}")
    field = _field_of_order(q)
    factors = poly.factor(poly.binomial(field, n, 1), seed=seed)
    entries: list[SearchEntry] = []
    spent = 0

    def remaining() -> int | None:
        return None if budget is None else budget - spent

    for exponents in itertools.product(*(range(m + 1) for _f, m in factors)):
        if not any(exponents) or all(e == m for e, (_f, m) in zip(exponents, factors)):
            continue  # k = n (g = 1) and k = 0 (g = x^n - 1)
        g = poly.Poly.one(field)
        for e, (f, _m) in zip(exponents, factors):
            g = g * f ** e
        code = ConstacyclicCode(field, n, 1, g)
        try:
            d_h = min_hamming_distance(code, "auto", budget=remaining(), jobs=jobs)
            spent += d_h.enumeration_count
            d_p = min_pair_distance(code, "auto", budget=remaining(), jobs=jobs)
            spent += d_p.enumeration_count
        except BudgetExceededError as exc:
            raise BudgetExceededError(
                f"search budget {budget} exhausted after {len(entries)} codes",
                enumerated=spent + exc.enumerated,
                partial=tuple(entries)) from exc
        entries.append(SearchEntry(code=code, d_hamming=d_h, d_pair=d_p))
        if max_codes is not None and len(entries) >= max_codes:
            break
    return entries
