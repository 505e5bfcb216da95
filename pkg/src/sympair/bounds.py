"""Distance bounds: Singleton-type pair bound, pair-distance floors for
constacyclic codes, the repeated-root Hamming-distance product formula via
residue codes, and the BCH / Hartmann-Tzeng bounds for defining sets.

The pair-distance floors capture two structural facts about constacyclic
codes with 0 < d_H < n:

* ``pair_distance_floor`` — d_p = d_H + 1 exactly when the code is MDS
  (k = n - d_H + 1); otherwise d_p >= d_H + 2, improving to d_H + 3 when
  k > 1 and n - d_H >= 2k - 1.
* ``repeated_root_pair_floor`` — for repeated-root cyclic codes of length
  l * p^e with d_H prime, d_p >= d_H + 3 when l < d_H < n - k (condition 1)
  or when (x^l - 1) | g and 2 < d_H < n - k (condition 2).

``castagnoli_distance`` computes the exact minimum Hamming distance of a
repeated-root cyclic code as min over t of P_t * d_H(residue_t), where P_t
multiplies (digit + 1) over the base-p digits of t and residue_t is the
simple-root length-l code generated by the factors of g of multiplicity
greater than t (distance infinity for the zero residue code).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gf, poly
from .code import ConstacyclicCode, min_hamming_distance
from .errors import (
    BadParameterError,
    NotCoprimeError,
    NotRepeatedRootError,
    NotUnionOfCosetsError,
    OutOfScopeError,
    ZeroCodeError,
)

#: Distance of the zero residue code; absorbs multiplication, loses every min.
INF = math.inf

#: Residue codes at or below this many codewords are scanned exhaustively.
_RESIDUE_EXHAUSTIVE_LIMIT = 1 << 20


def singleton_pair_max(n: int, q: int, k: int) -> int:
    """Largest pair distance allowed by M <= q^(n - d_p + 2) for M = q^k.

    A code meeting it with equality is an MDS symbol-pair code.
    """
    if not (isinstance(n, int) and n >= 2):
        raise BadParameterError(f"length must be an integer >= 2, got {n!r}")
    if not (isinstance(q, int) and q >= 2):
        raise BadParameterError(f"alphabet size must be an integer >= 2, got {q!r}")
    if not (isinstance(k, int) and 1 <= k <= n):
        raise BadParameterError(f"dimension must satisfy 1 <= k <= {n}, got {k!r}")
    return n - k + 2


@dataclass(frozen=True)
class PairDistanceFloor:
    """Lower bound on d_p from (n, k, d_H) alone; exact when the code is MDS."""

    applicable: bool
    lower_bound: int | None
    exact: bool

    def to_dict(self) -> dict:
        return {"applicable": self.applicable, "lower_bound": self.lower_bound,
                "exact": self.exact}


def pair_distance_floor(n: int, k: int, d_hamming: int) -> PairDistanceFloor:
    """Pair-distance floor for any constacyclic [n, k, d_H] code, 2 <= d_H < n."""
    if not (isinstance(n, int) and n >= 2 and isinstance(k, int) and 1 <= k < n):
        raise BadParameterError(f"need n >= 2 and 1 <= k < n, got n={n!r}, k={k!r}")
    if not isinstance(d_hamming, int) or d_hamming < 2 or d_hamming >= n:
        raise OutOfScopeError(
            f"pair-distance floor covers 2 <= d_H < n only, got d_H={d_hamming!r}, n={n}")
    if k == n - d_hamming + 1:
        return PairDistanceFloor(True, d_hamming + 1, True)
    bound = d_hamming + 2
    if k > 1 and n - d_hamming >= 2 * k - 1:
        bound = d_hamming + 3
    return PairDistanceFloor(True, bound, False)


# ----------------------------------------------------------------------
# repeated-root machinery

@dataclass(frozen=True)
class RepeatedRootShape:
    """Shape data of a repeated-root cyclic code: n = l * p^e, l > 1 coprime to p.

    ``factors`` lists every monic irreducible factor of x^l - 1 (sorted by
    degree, then coefficients) with its multiplicity in g, zeros included.
    """

    field: gf.Field
    ell: int
    e: int
    factors: tuple[tuple[poly.Poly, int], ...]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.ell * self.p ** self.e


def repeated_root_shape(code: ConstacyclicCode, seed: int = 0) -> RepeatedRootShape:
    """Factor-multiplicity shape of a repeated-root cyclic code.

    Raises NotRepeatedRootError unless the code is cyclic with n = l * p^e,
    e >= 1 and l > 1.
    """
    if not code.is_cyclic:
        raise NotRepeatedRootError(
            f"repeated-root analysis needs a cyclic code, got lambda = {code.lam}")
    p = code.field.p
    n = code.n
    if n % p != 0:
        raise NotRepeatedRootError(f"gcd(n, p) = 1: [{n}] over GF({code.field.q}) is simple-root")
    e = 0
    ell = n
    while ell % p == 0:
        ell //= p
        e += 1
    if ell == 1:
        raise NotRepeatedRootError(
            f"n = {n} is a pure power of the characteristic; need l > 1 in n = l * p^e")
    base_factors = poly.factor(poly.binomial(code.field, ell, 1), seed=seed)
    assert base_factors.unit == 1
    factors = tuple((f, poly.multiplicity(code.g, f)) for f, mult in base_factors)
    # sanity: g is exactly the product of these factor powers
    rebuilt = poly.Poly.one(code.field)
    for f, mult in factors:
        rebuilt = rebuilt * f ** mult
    assert rebuilt == code.g, "generator must factor over x^l - 1"
    assert all(mult <= p ** e for _, mult in factors)
    return RepeatedRootShape(field=code.field, ell=ell, e=e, factors=factors)


def radix_p_product(t: int, p: int) -> int:
    """P_t: the product of (digit + 1) over the base-p digits of t (P_0 = 1)."""
    if not isinstance(t, int) or t < 0:
        raise BadParameterError(f"t must be a nonnegative integer, got {t!r}")
    if not gf.is_prime(p):
        raise BadParameterError(f"p must be prime, got {p!r}")
    out = 1
    while t:
        out *= t % p + 1
        t //= p
    return out


def residue_code(shape: RepeatedRootShape | ConstacyclicCode, t: int) -> ConstacyclicCode:
    """The simple-root length-l cyclic code generated by the factors of
    multiplicity > t.  May be the zero code (k = 0) or the full space."""
    if isinstance(shape, ConstacyclicCode):
        shape = repeated_root_shape(shape)
    if not isinstance(t, int) or not 0 <= t <= shape.p ** shape.e - 1:
        raise BadParameterError(
            f"t must lie in [0, p^e - 1] = [0, {shape.p ** shape.e - 1}], got {t!r}")
    g_t = poly.Poly.one(shape.field)
    for f, mult in shape.factors:
        if mult > t:
            g_t = g_t * f
    return ConstacyclicCode(shape.field, shape.ell, 1, g_t)


@dataclass(frozen=True)
class CastagnoliTerm:
    """One t-term of the repeated-root distance formula."""

    t: int
    radix_product: int
    residue_generator: poly.Poly
    residue_distance: int | float  # INF for the zero residue code
    contribution: int | float


def castagnoli_details(code: ConstacyclicCode, seed: int = 0, jobs: int = 1):
    """(distance, per-t terms, enumeration count) of the product formula.

    The distance is min over 0 <= t < p^e of P_t * d_H(residue_t); zero
    residue codes contribute INF and cannot all occur for a nonzero code.
    Residue distances are certified by exhaustive or bounded enumeration.
    """
    if code.k == 0:
        raise ZeroCodeError("the zero code has no minimum distance")
    shape = repeated_root_shape(code, seed=seed)
    pe = shape.p ** shape.e
    cache: dict[tuple[int, ...], tuple[int | float, int]] = {}
    terms = []
    enumerated = 0
    for t in range(pe):
        key = tuple(i for i, (_f, mult) in enumerate(shape.factors) if mult > t)
        if key not in cache:
            res = residue_code(shape, t)
            if res.k == 0:
                cache[key] = (INF, 0)
            elif res.k == res.n:
                cache[key] = (1, 0)
            else:
                strategy = ("exhaustive"
                            if res.field.q ** res.k <= _RESIDUE_EXHAUSTIVE_LIMIT
                            else "bounded_weight")
                result = min_hamming_distance(res, strategy, jobs=jobs)
                cache[key] = (result.value, result.enumeration_count)
            enumerated += cache[key][1]
        d_t, _ = cache[key]
        P_t = radix_p_product(t, shape.p)
        terms.append(CastagnoliTerm(
            t=t, radix_product=P_t,
            residue_generator=residue_code(shape, t).g,
            residue_distance=d_t,
            contribution=INF if d_t is INF else P_t * d_t))
    value = min(term.contribution for term in terms)
    assert value is not INF, "a nonzero code has a nonzero residue code"
    return int(value), tuple(terms), enumerated


def castagnoli_distance(code: ConstacyclicCode, seed: int = 0, jobs: int = 1) -> int:
    """Exact minimum Hamming distance of a repeated-root cyclic code."""
    return castagnoli_details(code, seed=seed, jobs=jobs)[0]


@dataclass(frozen=True)
class RepeatedRootPairFloor:
    """d_p >= d_H + 3 floor for repeated-root cyclic codes with prime d_H."""

    applicable: bool
    condition_used: int | None  # 1: l < d_H < n - k; 2: (x^l - 1) | g, 2 < d_H < n - k
    lower_bound: int | None

    def to_dict(self) -> dict:
        return {"applicable": self.applicable, "condition_used": self.condition_used,
                "lower_bound": self.lower_bound}


def repeated_root_pair_floor(code: ConstacyclicCode, d_hamming: int,
                             seed: int = 0) -> RepeatedRootPairFloor:
    """Check the repeated-root pair floor; inapplicable rather than guessed
    when d_H is not prime or neither condition window holds."""
    shape = repeated_root_shape(code, seed=seed)
    n, k = code.n, code.k
    if not gf.is_prime(d_hamming):
        return RepeatedRootPairFloor(False, None, None)
    if shape.ell < d_hamming < n - k:
        return RepeatedRootPairFloor(True, 1, d_hamming + 3)
    ell_binomial = poly.binomial(code.field, shape.ell, 1)
    if (code.g % ell_binomial).is_zero() and 2 < d_hamming < n - k:
        return RepeatedRootPairFloor(True, 2, d_hamming + 3)
    return RepeatedRootPairFloor(False, None, None)


# ----------------------------------------------------------------------
# defining-set bounds (simple-root cyclic codes)

def _validate_exponent_set(T, n: int) -> set[int]:
    out = set()
    for x in T:
        if not isinstance(x, int) or not 0 <= x < n:
            raise BadParameterError(f"exponent {x!r} is not in Z_{n}")
        out.add(x)
    return out


def bch_bound(T, n: int) -> int:
    """1 + the longest circular run of consecutive residues contained in T."""
    if not isinstance(n, int) or n < 1:
        raise BadParameterError(f"modulus must be a positive integer, got {n!r}")
    T = _validate_exponent_set(T, n)
    if len(T) == n:
        return n + 1
    best = 0
    run = 0
    for i in range(2 * n):
        if i % n in T:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return 1 + best


def hartmann_tzeng_bound(T, n: int, q: int) -> int:
    """Exhaustive Hartmann-Tzeng bound over a defining set T.

    max of delta + s over b, delta >= 2, a with gcd(a, n) < delta and s >= 0
    such that {b + i1 + i2*a : 0 <= i1 <= delta-2, 0 <= i2 <= s} lies in T.
    Always >= the BCH bound (a = 1, s = 0 recovers it).
    """
    if math.gcd(n, q) != 1:
        raise NotCoprimeError(f"gcd({n}, {q}) = {math.gcd(n, q)} != 1")
    T = _validate_exponent_set(T, n)
    if {x * q % n for x in T} - T:
        raise NotUnionOfCosetsError(
            f"T is not closed under *{q} mod {n}; the bound applies to defining sets only")
    if not T:
        return 1
    if len(T) == n:
        return n + 1
    runlen = [0] * n
    for x in range(n):
        L = 0
        while L < n and (x + L) % n in T:
            L += 1
        runlen[x] = L
    best = 1
    for b in range(n):
        for delta in range(2, runlen[b] + 2):
            need = delta - 1
            for a in range(1, n):
                if math.gcd(a, n) >= delta:
                    continue
                s = 0
                pos = (b + a) % n
                while runlen[pos] >= need:
                    s += 1
                    pos = (pos + a) % n
                    assert s <= n, "T != Z_n and gcd(a, n) < delta forbid full cycles"
                if delta + s > best:
                    best = delta + s
    return best


# ----------------------------------------------------------------------
# aggregate report

@dataclass(frozen=True)
class BoundReport:
    """Every bound the toolkit can attach to one code (None = not applicable)."""

    singleton_pair_max_dp: int
    constacyclic_floor: PairDistanceFloor
    repeated_root_floor: RepeatedRootPairFloor
    castagnoli_d_hamming: int | None
    bch: int | None
    hartmann_tzeng: int | None

    def to_dict(self) -> dict:
        return {
            "singleton_pair_max_dp": self.singleton_pair_max_dp,
            "constacyclic_floor": self.constacyclic_floor.to_dict(),
            "repeated_root_floor": self.repeated_root_floor.to_dict(),
            "castagnoli_d_hamming": self.castagnoli_d_hamming,
            "bch": self.bch,
            "hartmann_tzeng": self.hartmann_tzeng,
        }


def bound_report(code: ConstacyclicCode, d_hamming: int | None = None,
                 seed: int = 0) -> BoundReport:
    """Aggregate all applicable bounds for a code (k >= 1)."""
    if code.k == 0:
        raise ZeroCodeError("bounds are reported for nonzero codes only")
    if d_hamming is not None and 2 <= d_hamming < code.n and code.k < code.n:
        floor = pair_distance_floor(code.n, code.k, d_hamming)
    else:
        floor = PairDistanceFloor(False, None, False)
    try:
        shape_ok = repeated_root_shape(code, seed=seed) is not None
    except NotRepeatedRootError:
        shape_ok = False
    if shape_ok:
        castagnoli = castagnoli_distance(code, seed=seed)
        rr_floor = (repeated_root_pair_floor(code, d_hamming, seed=seed)
                    if d_hamming is not None
                    else RepeatedRootPairFloor(False, None, None))
    else:
        castagnoli = None
        rr_floor = RepeatedRootPairFloor(False, None, None)
    T = code.defining_set()
    if T is not None:
        bch = bch_bound(T, code.n)
        ht = hartmann_tzeng_bound(T, code.n, code.field.q)
    else:
        bch = ht = None
    return BoundReport(
        singleton_pair_max_dp=singleton_pair_max(code.n, code.field.q, code.k),
        constacyclic_floor=floor,
        repeated_root_floor=rr_floor,
        castagnoli_d_hamming=castagnoli,
        bch=bch,
        hartmann_tzeng=ht,
    )
