"""The three definite cobordisms out of the branched double cover.

Each construction attaches 2-handles to I x Sigma_2(D_n(T_{p,q})) along a
framed link and is recorded here as exact data: boundary components,
intersection form, and homology flags.  With Sigma = Sigma_2(D_n(T_{p,q})):

  Z : negative definite, to -Sigma(p, q, n*p*q - 1).  Handles undo the c
      positive crossings of the companion with -1 framing; form -I_c.
  R : negative definite, to S^3 (capped with a 4-ball, so no outgoing
      boundary).  n handles with -1 framing along the clasp; form -I_n.
  P : positive definite, to two copies of -Sigma(p, q, 2n*p*q - 1).
      n handles with +1 framing; form +I_n.

All three have trivial integral first homology.  The records are certified
summaries, not handle-by-handle 4-manifold structures: downstream consumers
need only boundaries, forms, and flags.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Union

from .covers import (
    KILL_LONGITUDE,
    KILL_MERIDIAN,
    BranchedCover,
    SatelliteParams,
    ThreeSphere,
    double_cover_decomposition,
    moser_identify,
    post_surgery_gluing,
    slope_from_filling,
)
from .errors import InvalidParams
from .exactmath import Definiteness, SymIntMatrix, definiteness
from .fs_invariant import BrieskornSphere

BoundarySpace = Union[BranchedCover, BrieskornSphere, ThreeSphere]


class CobordismLabel(Enum):
    Z = "Z"
    R = "R"
    P = "P"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BoundaryComponent:
    """A boundary piece: an oriented space with a multiplicity >= 1."""

    space: BoundarySpace
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise InvalidParams(f"multiplicity must be >= 1, got {self.multiplicity}")

    def reversed(self) -> "BoundaryComponent":
        return BoundaryComponent(self.space.reversed(), self.multiplicity)

    def __str__(self) -> str:
        mult = f"{self.multiplicity} x " if self.multiplicity > 1 else ""
        return f"{mult}{self.space}"


@dataclass(frozen=True)
class CobordismRecord:
    """Certified summary of one Z/R/P construction.

    orientation is +1 for the cobordism as built and -1 for its reversal;
    the label-specific form shapes below hold for orientation +1 and negate
    under reversal.
    """

    label: CobordismLabel
    params: SatelliteParams
    incoming: BoundaryComponent
    outgoing: tuple[BoundaryComponent, ...]
    form: SymIntMatrix
    h1_z2_trivial: bool
    handle_count: int
    orientation: int = 1

    def __post_init__(self) -> None:
        if self.handle_count < 1:
            raise InvalidParams(f"handle count must be >= 1, got {self.handle_count}")
        if self.orientation not in (1, -1):
            raise InvalidParams("orientation must be +1 or -1")

    def __str__(self) -> str:
        sign = "" if self.orientation == 1 else "-"
        return f"{sign}{self.label}({self.params.n},{self.params.p},{self.params.q})"


def default_crossing_count(p: int, q: int) -> int:
    """Length of the standard positive-to-negative unknotting sequence of
    T_{p,q}: its unknotting number (p-1)(q-1)/2."""
    return (p - 1) * (q - 1) // 2


def build_Z(s: SatelliteParams, crossings: int | None = None) -> CobordismRecord:
    """Negative definite cobordism from the cover to -Sigma(p, q, n*p*q - 1).

    crossings overrides the number of crossing changes used to unknot the
    companion (any positive-to-negative sequence works); the default is the
    torus-knot unknotting number.  The outgoing sphere is computed honestly:
    the filling slope 1/n is read off the splitting's gluing map, then fed
    through the Moser identification.
    """
    c = default_crossing_count(s.p, s.q) if crossings is None else crossings
    if c < 1:
        raise InvalidParams(f"crossing count must be >= 1, got {c}")
    decomposition = double_cover_decomposition(s)
    slope = slope_from_filling(decomposition.gluings[0], KILL_LONGITUDE)
    outgoing = moser_identify(s.p, s.q, slope)
    form = SymIntMatrix.identity(c, scale=-1)
    assert definiteness(form) is Definiteness.NEGATIVE_DEFINITE
    return CobordismRecord(
        label=CobordismLabel.Z,
        params=s,
        incoming=BoundaryComponent(BranchedCover(s)),
        outgoing=(BoundaryComponent(outgoing),),
        form=form,
        h1_z2_trivial=True,
        handle_count=c,
    )


def build_R(s: SatelliteParams) -> CobordismRecord:
    """Negative definite cobordism from the cover to the empty manifold.

    The n -1-framed handles along the clasp turn the cover into 1/0 surgery
    on both companion copies, i.e. S^3, which is then capped with a 4-ball.
    """
    slope = slope_from_filling(post_surgery_gluing(s.n, handle_sign=-1), KILL_MERIDIAN)
    capped = moser_identify(s.p, s.q, slope)
    assert isinstance(capped, ThreeSphere)
    form = SymIntMatrix.identity(s.n, scale=-1)
    assert definiteness(form) is Definiteness.NEGATIVE_DEFINITE
    return CobordismRecord(
        label=CobordismLabel.R,
        params=s,
        incoming=BoundaryComponent(BranchedCover(s)),
        outgoing=(),
        form=form,
        h1_z2_trivial=True,
        handle_count=s.n,
    )


def build_P(s: SatelliteParams) -> CobordismRecord:
    """Positive definite cobordism from the cover to two copies of
    -Sigma(p, q, 2n*p*q - 1), via the slope-1/(2n) filling of each companion
    copy induced by the +1-framed handles."""
    slope = slope_from_filling(post_surgery_gluing(s.n, handle_sign=+1), KILL_MERIDIAN)
    outgoing = moser_identify(s.p, s.q, slope)
    form = SymIntMatrix.identity(s.n, scale=1)
    assert definiteness(form) is Definiteness.POSITIVE_DEFINITE
    return CobordismRecord(
        label=CobordismLabel.P,
        params=s,
        incoming=BoundaryComponent(BranchedCover(s)),
        outgoing=(BoundaryComponent(outgoing, multiplicity=2),),
        form=form,
        h1_z2_trivial=True,
        handle_count=s.n,
    )


def reverse_orientation(r: CobordismRecord) -> CobordismRecord:
    """Orientation reversal: negates the form, flips every boundary
    component, and swaps the definiteness class.  An involution."""
    return replace(
        r,
        incoming=r.incoming.reversed(),
        outgoing=tuple(b.reversed() for b in r.outgoing),
        form=-r.form,
        orientation=-r.orientation,
    )
