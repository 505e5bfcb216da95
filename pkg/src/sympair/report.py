"""Code spec files and machine-readable analysis reports.

A *code spec file* is the JSON interchange format for a single code:

    {"p": 5, "m": 1, "n": 24, "lambda": 1, "generator": [c0, c1, ...]}
    {"p": 5, "m": 1, "n": 24, "defining_set": [0, 1, ...]}

Field elements are canonical integers (sum of c_i * p^i over the base-p
coordinates); polynomial coefficient lists are ascending in the exponent.
The defining-set form implies lambda = 1 and must be closed under
multiplication by q modulo n.

``analyze`` bundles everything the toolkit knows about one code into an
``AnalysisReport``.  Reports serialize to JSON with a stable key order, and
everything outside the "perf" key is deterministic for fixed inputs, seed,
and toolkit version — byte-identical across runs and job counts.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from pathlib import Path

from . import gf, poly
from ._version import __version__
from .bounds import BoundReport, bound_report
from .code import ConstacyclicCode, DistanceResult, min_hamming_distance, min_pair_distance
from .errors import BadParameterError, BudgetExceededError

_SPEC_KEYS = {"p", "m", "n", "lambda", "generator", "defining_set"}


def _require_int(data: dict, key: str) -> int:
    if key not in data:
        raise BadParameterError(f"code spec is missing required key {key!r}")
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise BadParameterError(f"code spec key {key!r} must be an integer, got {value!r}")
    return value


def code_from_spec_dict(data: dict) -> ConstacyclicCode:
    """Build the code a spec dict describes (strictly validated)."""
    if not isinstance(data, dict):
        raise BadParameterError(f"code spec must be a JSON object, got {type(data).__name__}")
    unknown = set(data) - _SPEC_KEYS
    if unknown:
        raise BadParameterError(f"code spec has unknown keys: {sorted(unknown)}")
    p = _require_int(data, "p")
    m = _require_int(data, "m")
    n = _require_int(data, "n")
    field = gf.prime_field(p) if m == 1 else gf.extension_field(p, m)
    has_gen = "generator" in data
    has_set = "defining_set" in data
    if has_gen == has_set:
        raise BadParameterError(
            "code spec must carry exactly one of 'generator' (with 'lambda') or 'defining_set'")
    if has_gen:
        lam = _require_int(data, "lambda")
        coeffs = data["generator"]
        if not isinstance(coeffs, list):
            raise BadParameterError("'generator' must be a list of canonical integers")
        return ConstacyclicCode(field, n, lam, poly.Poly(field, coeffs))
    if "lambda" in data and data["lambda"] != 1:
        raise BadParameterError("the defining-set form implies lambda = 1")
    exponents = data["defining_set"]
    if not isinstance(exponents, list):
        raise BadParameterError("'defining_set' must be a list of integers")
    return ConstacyclicCode.from_defining_set(field, n, exponents)


def load_code_spec(source) -> ConstacyclicCode:
    """Load a code from a spec file path (or an already-parsed dict)."""
    if isinstance(source, dict):
        return code_from_spec_dict(source)
    if isinstance(source, (str, os.PathLike)):
        try:
            data = json.loads(Path(source).read_text())
        except json.JSONDecodeError as exc:
            raise BadParameterError(f"code spec {source} is not valid JSON: {exc}") from exc
        return code_from_spec_dict(data)
    raise BadParameterError(f"expected a path or dict, got {type(source).__name__}")


def code_spec_dict(code: ConstacyclicCode) -> dict:
    """Spec dict for a code (generator form: lossless for any lambda)."""
    return {
        "p": code.field.p,
        "m": code.field.m,
        "n": code.n,
        "lambda": code.lam,
        "generator": list(code.g.coeffs),
    }


def save_code_spec(code: ConstacyclicCode, path) -> None:
    Path(path).write_text(json.dumps(code_spec_dict(code), indent=2) + "\n")


# ----------------------------------------------------------------------
# analysis

@dataclass(frozen=True)
class AnalysisReport:
    """Everything the toolkit certifies about one code in one place."""

    code: ConstacyclicCode
    d_hamming: DistanceResult
    d_pair: DistanceResult
    bounds: BoundReport
    mds_hamming: bool
    mds_pair: bool
    version: str
    seed: int
    perf: dict

    def to_dict(self, include_perf: bool = True) -> dict:
        out = {
            "version": self.version,
            "seed": self.seed,
            "code": _identity_dict(self.code),
            "d_hamming": self.d_hamming.to_dict(),
            "d_pair": self.d_pair.to_dict(),
            "bounds": self.bounds.to_dict(),
            "mds_hamming": self.mds_hamming,
            "mds_pair": self.mds_pair,
        }
        if include_perf:
            out["perf"] = dict(self.perf)
        return out

    def to_json(self, include_perf: bool = True) -> str:
        return json.dumps(self.to_dict(include_perf), indent=2)


def _identity_dict(code: ConstacyclicCode) -> dict:
    T = code.defining_set()
    if code.is_cyclic and code.is_simple_root:
        ext, beta = poly.root_of_unity_context(code.field, code.n)
        beta_info = {"field": repr(ext), "value": beta}
    else:
        beta_info = None
    return {
        "q": code.field.q,
        "p": code.field.p,
        "m": code.field.m,
        "n": code.n,
        "lambda": code.lam,
        "k": code.k,
        "generator": list(code.g.coeffs),
        "defining_set": sorted(T) if T is not None else None,
        "beta": beta_info,
    }


def _partial_report(exc: BudgetExceededError, code: ConstacyclicCode, seed: int,
                    stage: str, d_hamming: DistanceResult | None) -> dict:
    partial = {
        "version": __version__,
        "seed": seed,
        "code": _identity_dict(code),
        "budget_exhausted": stage,
        "d_hamming": d_hamming.to_dict() if d_hamming is not None else None,
        "d_pair": None,
    }
    partial[stage] = {
        "value": exc.lower_bound,
        "certified": False,
        "is_lower_bound": True,
        "upper_bound": exc.upper_bound,
        "enumeration_count": exc.enumerated,
    }
    return partial


def analyze(code: ConstacyclicCode, strategy: str = "auto", *,
            budget: int | None = None, seed: int = 0, jobs: int = 1) -> AnalysisReport:
    """Certify both distances, attach every applicable bound, set MDS flags.

    ``strategy`` follows min_hamming_distance; "castagnoli" applies to the
    Hamming side only, the pair side then falls back to "auto".  ``budget``
    caps total encodings across both enumerations; exceeding it raises
    BudgetExceededError with the partial report dict attached as ``partial``.
    """
    t0 = time.perf_counter()
    pair_strategy = "auto" if strategy == "castagnoli" else strategy
    try:
        d_h = min_hamming_distance(code, strategy, budget=budget, jobs=jobs)
    except BudgetExceededError as exc:
        raise BudgetExceededError(
            str(exc), lower_bound=exc.lower_bound, upper_bound=exc.upper_bound,
            enumerated=exc.enumerated,
            partial=_partial_report(exc, code, seed, "d_hamming", None)) from exc
    remaining = None if budget is None else budget - d_h.enumeration_count
    try:
        d_p = min_pair_distance(code, pair_strategy, budget=remaining, jobs=jobs)
    except BudgetExceededError as exc:
        raise BudgetExceededError(
            str(exc), lower_bound=exc.lower_bound, upper_bound=exc.upper_bound,
            enumerated=d_h.enumeration_count + exc.enumerated,
            partial=_partial_report(exc, code, seed, "d_pair", d_h)) from exc
    bounds = bound_report(code, d_hamming=d_h.value if d_h.certified else None, seed=seed)
    report = AnalysisReport(
        code=code,
        d_hamming=d_h,
        d_pair=d_p,
        bounds=bounds,
        mds_hamming=d_h.certified and code.k == code.n - d_h.value + 1,
        mds_pair=d_p.certified and code.k == code.n - d_p.value + 2,
        version=__version__,
        seed=seed,
        perf={
            "seconds": round(time.perf_counter() - t0, 6),
            "encodings": d_h.enumeration_count + d_p.enumeration_count,
            "jobs": jobs,
        },
    )
    return report
