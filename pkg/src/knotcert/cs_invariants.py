"""Chern-Simons minima, Pontryagin numbers, and the moduli compactness test.

Everything here is a closed-form rational for the surgery family
Sigma(p, q, k*p*q - 1), so the arithmetic is exact Fractions end to end.
A triple (p, q, k) always refers to that sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidParams, NonIntegerCount


def _validate_triple(p: int, q: int, k: int) -> None:
    if p < 2 or q < 2:
        raise InvalidParams(f"p, q must be >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise InvalidParams(f"p, q must be coprime, got ({p}, {q})")
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")


@dataclass(frozen=True)
class TauValue:
    """Minimal Chern-Simons difference of a 3-manifold, a rational in (0, 4]."""

    value: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.value <= 4:
            raise InvalidParams(f"tau must lie in (0, 4], got {self.value}")


@dataclass(frozen=True)
class H1Data:
    """First-homology data of a 4-manifold: torsion order T and the defect
    beta = rank H_1(.; Z/2) - rank H_1(.; Z).

    The reducible-connection count is T / 2^beta; a positive beta with odd
    torsion can never produce an integer count, so that pair is rejected
    outright.
    """

    torsion_order: int
    beta: int

    def __post_init__(self) -> None:
        if self.torsion_order < 1:
            raise InvalidParams(f"torsion order must be >= 1, got {self.torsion_order}")
        if self.beta < 0:
            raise InvalidParams(f"beta must be >= 0, got {self.beta}")
        if self.beta > 0 and self.torsion_order % 2 != 0:
            raise InvalidParams(
                f"beta={self.beta} > 0 with odd torsion order {self.torsion_order} "
                "cannot yield an integral boundary count"
            )


def tau_brieskorn_family(p: int, q: int, k: int) -> TauValue:
    """tau(Sigma(p, q, k*p*q - 1)) = 1 / (p*q*(k*p*q - 1)), exactly."""
    _validate_triple(p, q, k)
    return TauValue(Fraction(1, p * q * (k * p * q - 1)))


def pontryagin_number(p: int, q: int, k: int) -> Fraction:
    """Relative Pontryagin number of the adapted bundle over the mapping-
    cylinder piece for Sigma(p, q, k*p*q - 1): 1 / (p*q*(k*p*q - 1)) < 4."""
    _validate_triple(p, q, k)
    value = Fraction(1, p * q * (k * p * q - 1))
    assert value < 4
    return value


def lens_cs_lower_bound(p: int, q: int, k: int) -> Fraction:
    """Lower bound for the minimal Chern-Simons invariant of the lens spaces
    surrounding the three singular fibers: min{1/p, 1/q, 1/(k*p*q - 1)}."""
    _validate_triple(p, q, k)
    return min(Fraction(1, p), Fraction(1, q), Fraction(1, k * p * q - 1))


@dataclass(frozen=True)
class CompactnessCheck:
    """One strict comparison in the compactness report."""

    label: str
    lhs: Fraction
    rhs: Fraction
    ok: bool

    def __str__(self) -> str:
        rel = "<" if self.ok else "!<"
        return f"{self.label}: {self.lhs} {rel} {self.rhs}"


@dataclass(frozen=True)
class CompactnessReport:
    """Outcome of the bubbling/breaking exclusion test; truthy iff compact."""

    ok: bool
    checks: tuple[CompactnessCheck, ...]

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        verdict = "compact" if self.ok else "not certified compact"
        return "\n".join([*(str(c) for c in self.checks), verdict])


def compactness_check(
    boundary: Iterable[Sequence[int]], terminal: Sequence[int]
) -> CompactnessReport:
    """Decide compactness of the instanton moduli space over the assembled end.

    terminal is the (p, q, k) of the sphere carrying the mapping-cylinder
    bundle; boundary lists the (p, q, k) of every other end.  Compactness
    holds iff p1 := pontryagin_number(terminal) satisfies p1 < 4 (no
    bubbling), p1 < the lens-space Chern-Simons bound, and p1 < tau of every
    boundary sphere (no breaking).  All comparisons are exact and reported.
    """
    pN, qN, kN = terminal
    p1 = pontryagin_number(pN, qN, kN)
    checks = [
        CompactnessCheck("p1 < 4 (no bubbling)", p1, Fraction(4), p1 < 4),
        CompactnessCheck(
            f"p1 < lens bound({pN},{qN},{kN})",
            p1,
            lens_cs_lower_bound(pN, qN, kN),
            p1 < lens_cs_lower_bound(pN, qN, kN),
        ),
    ]
    for p, q, k in boundary:
        tau = tau_brieskorn_family(p, q, k).value
        checks.append(CompactnessCheck(f"p1 < tau({p},{q},{k})", p1, tau, p1 < tau))
    return CompactnessReport(ok=all(c.ok for c in checks), checks=tuple(checks))


def count_reducibles(h: H1Data) -> Fraction:
    """Number of reducible limits, T / 2^beta, as an exact rational."""
    return Fraction(h.torsion_order, 2**h.beta)


def parity_obstruction(h: H1Data) -> bool:
    """True iff the reducible count is odd, i.e. the boundary-parity
    contradiction fires (a compact 1-manifold has evenly many endpoints).

    Raises NonIntegerCount when T / 2^beta is not an integer.
    """
    count = count_reducibles(h)
    if count.denominator != 1:
        raise NonIntegerCount(
            f"T/2^beta = {count} is not an integer (T={h.torsion_order}, beta={h.beta})"
        )
    return count.numerator % 2 == 1
