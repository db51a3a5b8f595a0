"""Closed-form bounds on the eccentricity Laplacian energy, and lemma residuals.

Every evaluator takes an :class:`EnergyReport` and returns a float, or
``None`` where the bound is undefined for that graph. ``nu_max`` and
``nu_min`` are the largest and smallest of ``|nu'_i|``.

Lower bounds (each should sit at or below ``LE_ecc``)::

    t1 = 2 sqrt(m + (E1 - zeta^2/n) / 2)                  = sqrt(2 S)
    t2 = sqrt(n E1 - zeta^2 + 2mn - n^2/4 (nu_max - nu_min)^2)
    t3 = (S + n nu_max nu_min) / (nu_max + nu_min)
    t5 = 2 sqrt(nu_max nu_min) / (nu_max + nu_min) * sqrt(n S)

Upper bound::

    t4 = sqrt(n E1 - zeta^2 + 2mn)                        = sqrt(n S)

with ``S = E1 - zeta^2/n + 2m`` the sum of squared shifts. ``t3_stated``
is the variant with ``- n nu_max nu_min`` in the numerator; it is reported
for reference only and never judged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .spectral_energy import EnergyReport

__all__ = [
    "BOUND_NAMES",
    "BOUNDS_CSV_FIELDS",
    "BoundsReport",
    "DEFAULT_BOUNDS_TOL",
    "LemmaResiduals",
    "check_bounds",
    "lemma_residuals",
    "nu_extremes",
    "theorem1_lower",
    "theorem2_lower",
    "theorem3_lower",
    "theorem3_stated",
    "theorem4_upper",
    "theorem5_lower",
]

DEFAULT_BOUNDS_TOL = 1e-9
# |nu'| at or below ZERO_REL * max(1, nu_max) counts as zero.
ZERO_REL = 1e-9

BOUND_NAMES = ("t1", "t2", "t3", "t4", "t5")
BOUNDS_CSV_FIELDS = (
    "graph_id", "LE_ecc", "t1", "t2", "t3_proof", "t3_stated", "t4", "t5",
    "verdicts", "max_residual",
)

PASS, FAIL, DEGENERATE, UNDEFINED = "pass", "fail", "degenerate", "undefined"


def nu_extremes(r: EnergyReport) -> tuple[float, float]:
    mags = [abs(x) for x in r.nu_prime]
    return max(mags), min(mags)


def _zero_level(nu_max: float) -> float:
    return ZERO_REL * max(1.0, nu_max)


def _noise_level(r: EnergyReport) -> float:
    # rounding scale for n * S style radicands
    return 1e-9 * r.n * max(1.0, r.n * r.nu_sq_sum)


def theorem1_lower(r: EnergyReport) -> float:
    radicand = r.m + 0.5 * (r.e1 - r.zeta ** 2 / r.n)
    return 2.0 * math.sqrt(max(radicand, 0.0))


def _t2_radicand(r: EnergyReport) -> float:
    hi, lo = nu_extremes(r)
    n = r.n
    return n * r.e1 - r.zeta ** 2 + 2 * r.m * n - n * n / 4.0 * (hi - lo) ** 2


def theorem2_lower(r: EnergyReport) -> float | None:
    """``None`` when the radicand is genuinely negative; rounding noise clamps to 0."""
    radicand = _t2_radicand(r)
    if radicand < -_noise_level(r):
        return None
    return math.sqrt(max(radicand, 0.0))


def theorem3_lower(r: EnergyReport) -> float | None:
    hi, lo = nu_extremes(r)
    if hi + lo <= _zero_level(hi):
        return None
    return (r.nu_sq_sum + r.n * hi * lo) / (hi + lo)


def theorem3_stated(r: EnergyReport) -> float | None:
    hi, lo = nu_extremes(r)
    if hi + lo <= _zero_level(hi):
        return None
    return (r.nu_sq_sum - r.n * hi * lo) / (hi + lo)


def theorem4_upper(r: EnergyReport) -> float:
    return math.sqrt(max(r.n * r.e1 - r.zeta ** 2 + 2 * r.m * r.n, 0.0))


def theorem5_lower(r: EnergyReport) -> float | None:
    """Zero when the smallest ``|nu'|`` vanishes; ``None`` when all do."""
    hi, lo = nu_extremes(r)
    zero = _zero_level(hi)
    if hi <= zero:
        return None
    if lo <= zero:
        return 0.0
    return 2.0 * math.sqrt(hi * lo) / (hi + lo) * theorem4_upper(r)


class LemmaResiduals(NamedTuple):
    trace: float
    frobenius: float
    pair_products: float

    def worst(self) -> float:
        return max(self)


def lemma_residuals(r: EnergyReport) -> LemmaResiduals:
    """Residuals of the three spectral identities.

    * ``|sum mu' - zeta|``
    * ``|sum mu'^2 - (E1 + 2m)|``
    * ``| |sum_{i<j} nu'_i nu'_j| - S/2 |`` with the pair sum taken directly.
    """
    mu = r.mu_prime
    nu = r.nu_prime
    pair_sum = 0.0
    for i in range(len(nu)):
        for j in range(i + 1, len(nu)):
            pair_sum += nu[i] * nu[j]
    return LemmaResiduals(
        abs(sum(mu) - r.zeta),
        abs(sum(x * x for x in mu) - (r.e1 + 2 * r.m)),
        abs(abs(pair_sum) - 0.5 * r.nu_sq_sum),
    )


@dataclass(frozen=True)
class BoundsReport:
    graph_id: str
    n: int
    le_ecc: float
    t1_lower: float
    t2_lower: float | None
    t3_lower: float | None
    t3_stated: float | None
    t4_upper: float
    t5_lower: float | None
    nu_max: float
    nu_min: float
    residuals: LemmaResiduals
    verdicts: dict = field(default_factory=dict)
    tol: float = DEFAULT_BOUNDS_TOL

    @property
    def passed(self) -> bool:
        return FAIL not in self.verdicts.values()

    @property
    def violations(self) -> list[str]:
        return [name for name in BOUND_NAMES if self.verdicts.get(name) == FAIL]

    @property
    def values(self) -> dict:
        return {"t1": self.t1_lower, "t2": self.t2_lower, "t3": self.t3_lower,
                "t4": self.t4_upper, "t5": self.t5_lower}

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "LE_ecc": self.le_ecc,
            "t1": self.t1_lower,
            "t2": self.t2_lower,
            "t3_proof": self.t3_lower,
            "t3_stated": self.t3_stated,
            "t4": self.t4_upper,
            "t5": self.t5_lower,
            "nu_max": self.nu_max,
            "nu_min": self.nu_min,
            "lemma_residuals": list(self.residuals),
            "verdicts": dict(self.verdicts),
            "passed": self.passed,
        }

    def csv_values(self, fmt) -> list[str]:
        opt = lambda x: "undefined" if x is None else fmt(x)  # noqa: E731
        return [
            self.graph_id, fmt(self.le_ecc), opt(self.t1_lower), opt(self.t2_lower),
            opt(self.t3_lower), opt(self.t3_stated), opt(self.t4_upper), opt(self.t5_lower),
            ";".join(self.verdicts[name] for name in BOUND_NAMES),
            fmt(self.residuals.worst()),
        ]


def check_bounds(r: EnergyReport, tol: float = DEFAULT_BOUNDS_TOL) -> BoundsReport:
    """Evaluate all bounds against ``LE_ecc`` with slack ``tol * max(1, LE_ecc)``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    le = r.ecc_laplacian_energy
    slack = tol * max(1.0, le)
    hi, lo = nu_extremes(r)
    zero = _zero_level(hi)

    t1 = theorem1_lower(r)
    t2 = theorem2_lower(r)
    t3 = theorem3_lower(r)
    t4 = theorem4_upper(r)
    t5 = theorem5_lower(r)

    def lower(value, degenerate=False):
        if value is None:
            return UNDEFINED
        if value > le + slack:
            return FAIL
        return DEGENERATE if degenerate else PASS

    verdicts = {
        "t1": lower(t1),
        "t2": lower(t2, degenerate=t2 is not None and _t2_radicand(r) <= 0.0),
        "t3": lower(t3),
        "t4": FAIL if t4 < le - slack else PASS,
        "t5": lower(t5, degenerate=lo <= zero),
    }
    return BoundsReport(
        graph_id=r.graph6,
        n=r.n,
        le_ecc=le,
        t1_lower=t1,
        t2_lower=t2,
        t3_lower=t3,
        t3_stated=theorem3_stated(r),
        t4_upper=t4,
        t5_lower=t5,
        nu_max=hi,
        nu_min=lo,
        residuals=lemma_residuals(r),
        verdicts=verdicts,
        tol=tol,
    )
