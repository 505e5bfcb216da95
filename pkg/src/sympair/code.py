"""Constacyclic codes, the symbol-pair metric, and exact distance engines.

Words are tuples of canonical integers.  A :class:`ConstacyclicCode` is
determined by (field, n, lambda, g) with g a monic divisor of x^n - lambda;
its codewords are the coefficient vectors of the degree-< n multiples of g.

Distance engines
----------------
``min_hamming_distance`` / ``min_pair_distance`` reduce both distances to
minimum (pair) weight over nonzero codewords by linearity and support three
strategies:

* ``exhaustive`` — scan all q^k - 1 nonzero codewords.
* ``bounded_weight`` — row-reduce the generator matrix to identity on the
  first k columns (always an information set: g has nonzero constant term)
  and enumerate messages level by level of increasing Hamming weight t.
  A codeword of weight w has at most w nonzero information symbols, so
  after finishing level t every unseen codeword has weight >= t + 1: the
  Hamming scan is exact once t >= best, and the pair scan is exact once
  t + 1 >= (minimum pair weight seen), because pair weight >= weight + 1
  for words that are neither zero nor all-nonzero and = n otherwise.
* ``castagnoli`` — repeated-root cyclic codes only; delegates to the
  residue-code product formula in :mod:`sympair.bounds` (Hamming only).

Enumeration is vectorized: message blocks hit the generator matrix as one
batched float matmul (exact: entries stay far below 2^53, and float32 is
used only while (q-1)^2 * t < 2^24) for prime fields, or as table-gather
accumulation for extension fields.  Levels are always scanned completely,
so results and enumeration counts are deterministic and independent of the
worker count.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import gf, poly
from .errors import (
    BadParameterError,
    BudgetExceededError,
    DegenerateCodeError,
    LengthMismatchError,
    LengthTooShortError,
    NotCoprimeError,
    NotDivisorError,
    NotUnionOfCosetsError,
    OutOfScopeError,
    StrategyInapplicableError,
    ZeroCodeError,
)

#: Work-array size (cells) per enumeration block; keeps peak memory modest.
_CELL_BUDGET = 1 << 22

#: auto strategy uses exhaustive scan below this many codewords.
_AUTO_EXHAUSTIVE_LIMIT = 1 << 12


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance computation.

    ``value`` is the exact distance unless ``is_lower_bound`` is set, in
    which case only ``value <= d`` was proven (and ``upper_bound``, when not
    None, is the smallest witness weight seen).  ``certified`` records that
    the method's soundness condition held for whatever is being reported.
    """

    value: int
    method: str  # "exhaustive" | "bounded_weight" | "castagnoli"
    certified: bool
    enumeration_count: int
    is_lower_bound: bool = False
    upper_bound: int | None = None

    def to_dict(self) -> dict:
        out = {
            "value": self.value,
            "method": self.method,
            "certified": self.certified,
            "enumeration_count": self.enumeration_count,
            "is_lower_bound": self.is_lower_bound,
        }
        if self.is_lower_bound:
            out["upper_bound"] = self.upper_bound
        return out


# ----------------------------------------------------------------------
# words and the pair metric

def as_word(field: gf.Field, symbols) -> tuple[int, ...]:
    """Coerce a sequence of ints/Elements into a canonical-integer word."""
    out = []
    for s in symbols:
        if isinstance(s, gf.Element):
            if s.field != field:
                raise BadParameterError(f"symbol {s!r} does not belong to {field!r}")
            out.append(s.value)
        else:
            out.append(field.check(s))
    return tuple(out)


def hamming_weight(word) -> int:
    return sum(1 for s in word if s != 0)


def hamming_distance(a, b) -> int:
    if len(a) != len(b):
        raise LengthMismatchError(f"word lengths differ: {len(a)} vs {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def pair_read_vector(word) -> tuple[tuple[int, int], ...]:
    """The cyclic sequence of overlapping pairs ((w_i, w_{i+1 mod n}))."""
    word = tuple(word)
    n = len(word)
    if n < 2:
        raise LengthTooShortError(f"pair reads need length >= 2, got {n}")
    return tuple((word[i], word[(i + 1) % n]) for i in range(n))


def pair_weight(word) -> int:
    """Number of nonzero entries of the pair read vector.

    Computed by the run identity: 0 for the zero word, n for an all-nonzero
    word, and otherwise Hamming weight plus the number of maximal circular
    runs of nonzero symbols.  (The all-nonzero case is the run formula with
    zero run starts.)  Verified against the definitional
    d_H(pi(x), pi(0)) oracle in the test suite.
    """
    word = tuple(word)
    n = len(word)
    if n < 2:
        raise LengthTooShortError(f"pair weight needs length >= 2, got {n}")
    w = 0
    runs = 0
    for i in range(n):
        if word[i] != 0:
            w += 1
            if word[i - 1] == 0:  # i-1 wraps to n-1 for i = 0: circular run starts
                runs += 1
    return w + runs


def pair_distance(a, b) -> int:
    """Hamming distance between the two pair read vectors."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise LengthMismatchError(f"word lengths differ: {len(a)} vs {len(b)}")
    if len(a) < 2:
        raise LengthTooShortError(f"pair distance needs length >= 2, got {len(a)}")
    n = len(a)
    return sum(1 for i in range(n)
               if (a[i], a[(i + 1) % n]) != (b[i], b[(i + 1) % n]))


def constacyclic_shift(field: gf.Field, lam: int, word) -> tuple[int, ...]:
    """tau_lambda: (x_0, ..., x_{n-1}) -> (lambda * x_{n-1}, x_0, ..., x_{n-2})."""
    word = as_word(field, word)
    if not word:
        return word
    return (field.mul(field.check(lam), word[-1]),) + word[:-1]


# ----------------------------------------------------------------------
# the code object

class ConstacyclicCode:
    """A lambda-constacyclic code of length n over GF(q) with generator g."""

    def __init__(self, field: gf.Field, n: int, lam: int, g: poly.Poly, *,
                 defining_set: frozenset[int] | None = None):
        if not isinstance(n, int) or n < 1:
            raise BadParameterError(f"length must be a positive integer, got {n!r}")
        field.check(lam)
        if lam == 0:
            raise BadParameterError("lambda must be nonzero")
        if not isinstance(g, poly.Poly) or g.field != field:
            raise BadParameterError(f"generator must be a Poly over {field!r}")
        if not g.is_monic():
            raise BadParameterError(f"generator must be monic, got {g}")
        if g.degree > n:
            raise NotDivisorError(f"deg g = {g.degree} exceeds the length {n}")
        modulus = poly.binomial(field, n, lam)
        if not (modulus % g).is_zero():
            raise NotDivisorError(f"{g} does not divide x^{n} - {lam} over {field!r}")
        self.field = field
        self.n = n
        self.lam = lam
        self.g = g
        self.k = n - g.degree
        self._defining_set = frozenset(defining_set) if defining_set is not None else None
        self._check_poly: poly.Poly | None = None
        self._std_form: np.ndarray | None = None

    # -- constructors --------------------------------------------------

    @classmethod
    def from_generator(cls, field: gf.Field, n: int, lam: int, g: poly.Poly) -> "ConstacyclicCode":
        return cls(field, n, lam, g)

    @classmethod
    def from_defining_set(cls, field: gf.Field, n: int, exponents, *,
                          expand: bool = False) -> "ConstacyclicCode":
        """Simple-root cyclic code whose roots are beta^j for j in the set.

        ``exponents`` must be closed under multiplication by q mod n; with
        ``expand=True`` it is instead treated as representatives and closed
        automatically.
        """
        q = field.q
        if math.gcd(n, q) != 1:
            raise NotCoprimeError(
                f"defining sets need gcd(n, q) = 1, got gcd({n}, {q}) = {math.gcd(n, q)}")
        T = set()
        for j in exponents:
            if not isinstance(j, int) or not 0 <= j < n:
                raise BadParameterError(f"exponent {j!r} is not in Z_{n}")
            T.add(j)
        if expand:
            T = {x for j in T for x in poly.cyclotomic_coset(n, q, j).members}
        else:
            missing = {j * q % n for j in T} - T
            if missing:
                raise NotUnionOfCosetsError(
                    f"exponent set is not closed under *{q} mod {n}: missing {sorted(missing)}")
        g = poly.Poly.one(field)
        for coset in poly.cyclotomic_cosets(n, q):
            if coset.representative in T:
                g = g * poly.minimal_polynomial(coset, field)
        code = cls(field, n, 1, g, defining_set=frozenset(T))
        assert code.k == n - len(T)
        return code

    # -- basic structure -----------------------------------------------

    def __repr__(self) -> str:
        return f"ConstacyclicCode([{self.n},{self.k}] over {self.field!r}, lambda={self.lam})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConstacyclicCode):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.lam == other.lam and self.g == other.g)

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.lam, self.g))

    @property
    def is_cyclic(self) -> bool:
        return self.lam == 1

    @property
    def is_simple_root(self) -> bool:
        return self.n % self.field.p != 0

    def check_polynomial(self) -> poly.Poly:
        """h = (x^n - lambda) / g."""
        if self._check_poly is None:
            self._check_poly = poly.binomial(self.field, self.n, self.lam) // self.g
        return self._check_poly

    def defining_set(self) -> frozenset[int] | None:
        """Exponent set of the code's roots (simple-root cyclic codes only).

        Derived from the generator when the code was not built from one;
        returns None for non-cyclic or repeated-root codes.
        """
        if self._defining_set is not None:
            return self._defining_set
        if not (self.is_cyclic and self.is_simple_root):
            return None
        T = set()
        for coset in poly.cyclotomic_cosets(self.n, self.field.q):
            if (self.g % poly.minimal_polynomial(coset, self.field)).is_zero():
                T.update(coset.members)
        self._defining_set = frozenset(T)
        return self._defining_set

    # -- codewords -----------------------------------------------------

    def encode(self, message) -> tuple[int, ...]:
        """Coefficients of m(x) * g(x), zero-padded to length n."""
        message = as_word(self.field, message)
        if len(message) != self.k:
            raise LengthMismatchError(
                f"message length {len(message)} != dimension {self.k}")
        word = poly.Poly(self.field, message) * self.g
        return word.coeffs + (0,) * (self.n - len(word.coeffs))

    def is_member(self, word) -> bool:
        word = as_word(self.field, word)
        if len(word) != self.n:
            raise LengthMismatchError(f"word length {len(word)} != n = {self.n}")
        return (poly.Poly(self.field, word) % self.g).is_zero()

    def shift(self, word) -> tuple[int, ...]:
        return constacyclic_shift(self.field, self.lam, word)

    def codewords(self):
        """Iterate all q^k codewords (small codes only)."""
        for message in itertools.product(range(self.field.q), repeat=self.k):
            yield self.encode(message)

    # -- matrices --------------------------------------------------------

    def generator_matrix(self) -> np.ndarray:
        """k x n integer matrix whose rows are x^i * g(x), i = 0..k-1."""
        if self.k == 0:
            raise DegenerateCodeError("the zero code has no generator matrix")
        G = np.zeros((self.k, self.n), dtype=np.int64)
        gc = self.g.coeffs
        for i in range(self.k):
            G[i, i:i + len(gc)] = gc
        return G

    def parity_check_matrix(self) -> np.ndarray:
        """(n-k) x n matrix H with G H^T = 0, built from the check polynomial."""
        if self.k == 0 or self.k == self.n:
            raise DegenerateCodeError(
                f"parity-check matrix needs 1 <= k <= n-1, got k = {self.k}")
        h = self.check_polynomial()
        H = np.zeros((self.n - self.k, self.n), dtype=np.int64)
        for i in range(self.n - self.k):
            for j in range(self.n):
                H[i, j] = h.coeff(self.k + i - j)
        return H

    def standard_form(self) -> np.ndarray:
        """Generator matrix row-reduced to the identity on the first k columns.

        The first k columns always form an information set: g(0) != 0 (x does
        not divide x^n - lambda), so the k x k leading block of the generator
        matrix is triangular with nonzero diagonal.
        """
        if self._std_form is None:
            if self.k == 0:
                raise DegenerateCodeError("the zero code has no standard form")
            F = self.field
            k, n = self.k, self.n
            rows = [list(map(int, r)) for r in self.generator_matrix()]
            for col in range(k):
                piv = next(r for r in range(col, k) if rows[r][col] != 0)
                rows[col], rows[piv] = rows[piv], rows[col]
                inv = F.inv(rows[col][col])
                rows[col] = [F.mul(inv, v) for v in rows[col]]
                for r in range(k):
                    if r != col and rows[r][col] != 0:
                        c = rows[r][col]
                        rows[r] = [F.sub(rows[r][j], F.mul(c, rows[col][j]))
                                   for j in range(n)]
            std = np.array(rows, dtype=np.int64)
            assert (std[:, :k] == np.eye(k, dtype=np.int64)).all()
            self._std_form = std
        return self._std_form


# ----------------------------------------------------------------------
# enumeration machinery

def colex_combinations(n: int, t: int):
    """t-subsets of range(n) in colexicographic order."""
    if t == 0:
        yield ()
        return
    for top in range(t - 1, n):
        for rest in colex_combinations(top, t - 1):
            yield rest + (top,)


class _Enumerator:
    """Streams nonzero-codeword masks for weight levels or full scans."""

    def __init__(self, code: ConstacyclicCode, jobs: int = 1):
        self.code = code
        self.field = code.field
        self.q = code.field.q
        self.k = code.k
        self.n = code.n
        self.jobs = max(1, jobs)
        self.count = 0
        G = code.standard_form()
        self.G_int = G
        if self.field.base is None:
            self.tables = None
        else:
            if self.q > 1024:
                raise OutOfScopeError(
                    f"vectorized enumeration supports extension fields up to order 1024, got {self.q}")
            F = self.field
            add = np.empty((self.q, self.q), dtype=np.int16)
            mul = np.empty((self.q, self.q), dtype=np.int16)
            for a in range(self.q):
                for b in range(self.q):
                    add[a, b] = F.add(a, b)
                    mul[a, b] = F.mul(a, b)
            self.tables = (add, mul)

    # dtype for the float (prime-field) path: float32 while exact
    def _float_dtype(self, terms: int):
        return np.float32 if (self.q - 1) ** 2 * terms < (1 << 24) else np.float64

    def level_size(self, t: int) -> int:
        return math.comb(self.k, t) * (self.q - 1) ** t

    def _encode_block(self, digits: np.ndarray, cols: np.ndarray | None):
        """Nonzero mask of the codewords for a block of message digit rows.

        digits: (R, t) integer array of message values; cols: the t
        information positions they occupy (None = all k, for full scans).
        Returns a boolean array of shape (R, n) or (B, R, n) when ``cols``
        is a (B, t) batch of supports.
        """
        if self.tables is None:
            dt = self._float_dtype(digits.shape[-1])
            Gf = self.G_int.astype(dt)
            sel = Gf if cols is None else Gf[cols]  # (t, n) / (B, t, n)
            C = digits.astype(dt) @ sel
            np.remainder(C, self.q, out=C)
            return C != 0
        add_t, mul_t = self.tables
        Gi = self.G_int.astype(np.int16)
        sel = Gi if cols is None else Gi[cols]
        if sel.ndim == 2:
            acc = np.zeros((digits.shape[0], self.n), dtype=np.int16)
            for i in range(digits.shape[1]):
                acc = add_t[acc, mul_t[digits[:, i][:, None], sel[i][None, :]]]
        else:
            B = sel.shape[0]
            acc = np.zeros((B, digits.shape[0], self.n), dtype=np.int16)
            for i in range(digits.shape[1]):
                term = mul_t[digits[:, i][None, :, None], sel[:, i, :][:, None, :]]
                acc = add_t[acc, term]
        return acc != 0

    @staticmethod
    def _value_block(lo: int, hi: int, t: int, base: int, shift: int) -> np.ndarray:
        """Rows lo..hi of the (base^t, t) mixed-radix table, entries + shift."""
        idx = np.arange(lo, hi, dtype=np.int64)
        powers = base ** np.arange(t - 1, -1, -1, dtype=np.int64)
        return (idx[:, None] // powers[None, :]) % base + shift

    def _level_tasks(self, t: int):
        """Yield (support-batch array, value row range) tasks for one level."""
        R = (self.q - 1) ** t
        if R > 1 << 48:
            raise OutOfScopeError(
                f"level {t} has {R} value tuples; set a budget to keep scans sane")
        row_chunk = max(1, _CELL_BUDGET // self.n)
        if R <= row_chunk:
            B = max(1, _CELL_BUDGET // (R * self.n))
            slices = [(0, R)]
        else:
            B = 1
            slices = [(a, min(a + row_chunk, R)) for a in range(0, R, row_chunk)]
        supports = colex_combinations(self.k, t)
        while True:
            chunk = list(itertools.islice(supports, B))
            if not chunk:
                return
            batch = np.array(chunk, dtype=np.intp)
            for sl in slices:
                yield batch, sl

    def scan_level(self, t: int, row_stat) -> int:
        """min of row_stat over all weight-t messages; deterministic in jobs."""

        def run(task):
            batch, (lo, hi) = task
            digits = self._value_block(lo, hi, t, self.q - 1, 1)
            return row_stat(self._encode_block(digits, batch))

        tasks = self._level_tasks(t)
        if self.jobs == 1:
            best = min(map(run, tasks))
        else:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                best = min(pool.map(run, tasks))
        self.count += self.level_size(t)
        return best

    def scan_all(self, row_stat) -> int:
        """min of row_stat over all q^k - 1 nonzero codewords."""
        total = self.q ** self.k - 1
        if total >= 1 << 62:
            raise OutOfScopeError(f"q^k = {total + 1} overflows the exhaustive scanner")
        block = max(1, _CELL_BUDGET // self.n)
        tasks = [(lo, min(lo + block, total + 1)) for lo in range(1, total + 1, block)]

        def run(span):
            lo, hi = span
            digits = self._value_block(lo, hi, self.k, self.q, 0)
            return row_stat(self._encode_block(digits, None))

        if self.jobs == 1:
            best = min(map(run, tasks))
        else:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                best = min(pool.map(run, tasks))
        self.count += total
        return best


def _stat_min_weight(nz: np.ndarray) -> int:
    return int(nz.sum(axis=-1, dtype=np.int16).min())


def _stat_min_pair_weight(nz: np.ndarray, prune_above: int) -> int:
    """Min pair weight among rows with Hamming weight <= prune_above.

    Rows above the threshold have pair weight >= weight + 1 > prune_above + 1,
    so they cannot improve any minimum the caller is tracking at or below
    prune_above + 2.  Returns a large sentinel when no row qualifies.
    """
    w = nz.sum(axis=-1, dtype=np.int16)
    flat = nz.reshape(-1, nz.shape[-1])
    wf = w.reshape(-1)
    mask = wf <= prune_above
    if not mask.any():
        return 1 << 30
    rows = flat[mask]
    starts = rows & ~np.roll(rows, 1, axis=1)
    wp = wf[mask] + starts.sum(axis=1, dtype=np.int16)
    return int(wp.min())


def _require_budget(enum: _Enumerator, next_cost: int, budget: int | None,
                    lower_bound: int, upper_bound: int | None, what: str) -> None:
    if budget is not None and enum.count + next_cost > budget:
        raise BudgetExceededError(
            f"{what}: next step needs {next_cost} encodings "
            f"({enum.count} used, budget {budget}); proven so far: >= {lower_bound}",
            lower_bound=lower_bound,
            upper_bound=upper_bound,
            enumerated=enum.count,
        )


def _resolve_strategy(code: ConstacyclicCode, strategy: str, *, for_pair: bool) -> str:
    if strategy in ("bounded", "bounded_weight"):
        return "bounded_weight"
    if strategy == "exhaustive":
        return "exhaustive"
    if strategy == "castagnoli":
        if for_pair:
            raise StrategyInapplicableError(
                "the castagnoli strategy computes Hamming distance only")
        from . import bounds
        from .errors import NotRepeatedRootError
        try:
            bounds.repeated_root_shape(code)
        except NotRepeatedRootError as exc:
            raise StrategyInapplicableError(f"castagnoli strategy: {exc}") from exc
        return "castagnoli"
    if strategy == "auto":
        if not for_pair and code.is_cyclic and not code.is_simple_root:
            from . import bounds
            from .errors import NotRepeatedRootError
            try:
                bounds.repeated_root_shape(code)
                return "castagnoli"
            except NotRepeatedRootError:
                pass
        if code.field.q ** code.k - 1 <= _AUTO_EXHAUSTIVE_LIMIT:
            return "exhaustive"
        return "bounded_weight"
    raise BadParameterError(
        f"unknown strategy {strategy!r}; expected auto, exhaustive, bounded or castagnoli")


def min_hamming_distance(code: ConstacyclicCode, strategy: str = "auto", *,
                         budget: int | None = None, max_weight: int | None = None,
                         jobs: int = 1) -> DistanceResult:
    """Exact minimum Hamming distance (or a certified lower bound).

    With ``max_weight=w`` the bounded scan stops after message-weight level
    w; if no codeword of weight <= w + 1 was pinned down the result carries
    ``is_lower_bound=True`` with value w + 1.
    """
    if code.k == 0:
        raise ZeroCodeError("the zero code has no minimum distance")
    resolved = _resolve_strategy(code, strategy, for_pair=False)

    if resolved == "castagnoli":
        from . import bounds
        value, _terms, enumerated = bounds.castagnoli_details(code)
        return DistanceResult(value, "castagnoli", True, enumerated)

    enum = _Enumerator(code, jobs=jobs)

    if resolved == "exhaustive":
        total = code.field.q ** code.k - 1
        _require_budget(enum, total, budget, 1, None, "exhaustive Hamming scan")
        best = enum.scan_all(_stat_min_weight)
        return DistanceResult(best, "exhaustive", True, enum.count)

    if max_weight is not None and max_weight < 1:
        raise BadParameterError(f"max_weight must be >= 1, got {max_weight}")
    limit = code.k if max_weight is None else min(code.k, max_weight)
    best = code.n + 1
    for t in range(1, limit + 1):
        if t >= best:
            return DistanceResult(best, "bounded_weight", True, enum.count)
        _require_budget(enum, enum.level_size(t), budget,
                        min(best, t), best if best <= code.n else None,
                        "bounded-weight Hamming scan")
        best = min(best, enum.scan_level(t, _stat_min_weight))
    if limit == code.k or best <= limit + 1:
        # every codeword seen, or unseen ones (weight >= limit+1) cannot beat it
        return DistanceResult(best, "bounded_weight", True, enum.count)
    return DistanceResult(limit + 1, "bounded_weight", True, enum.count,
                          is_lower_bound=True,
                          upper_bound=best if best <= code.n else None)


def min_pair_distance(code: ConstacyclicCode, strategy: str = "auto", *,
                      budget: int | None = None, jobs: int = 1) -> DistanceResult:
    """Exact minimum pair distance (= min pair weight over nonzero codewords).

    The bounded strategy deepens through message-weight levels t and stops
    as soon as t + 1 reaches the smallest pair weight seen: every unseen
    codeword then has Hamming weight >= t, hence pair weight >= t + 1, and
    cannot beat the minimum.
    """
    if code.k == 0:
        raise ZeroCodeError("the zero code has no minimum pair distance")
    if code.n < 2:
        raise LengthTooShortError("pair distance needs n >= 2")
    resolved = _resolve_strategy(code, strategy, for_pair=True)
    enum = _Enumerator(code, jobs=jobs)

    if resolved == "exhaustive":
        total = code.field.q ** code.k - 1
        _require_budget(enum, total, budget, 2, None, "exhaustive pair scan")
        best = enum.scan_all(lambda nz: _stat_min_pair_weight(nz, code.n))
        return DistanceResult(best, "exhaustive", True, enum.count)

    m = code.n + 2  # sentinel: no codeword seen yet
    for t in range(1, code.k + 1):
        if t + 1 >= m:
            break
        _require_budget(enum, enum.level_size(t), budget,
                        min(m, t + 1), m if m <= code.n else None,
                        "bounded-weight pair scan")
        prune = min(m, code.n + 2) - 2
        m = min(m, enum.scan_level(t, lambda nz: _stat_min_pair_weight(nz, prune)))
    assert m <= code.n, "a nonzero codeword must have been seen"
    return DistanceResult(m, "bounded_weight", True, enum.count)
