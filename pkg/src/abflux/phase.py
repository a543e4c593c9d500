"""Loop holonomy phases and a minimal two-beam fringe model.

Sign convention: transporting a charge q around a closed loop multiplies
its wave function by exp(-i*theta) with theta = q * (circulation of the
potential); only the real angle theta is stored, reduced to [0, 2*pi).
For a loop of winding number w in the exterior region this is
theta = 2*pi*q*gamma*w.  The angle, not any complex bookkeeping, is the
physical content, and it is periodic in gamma with period 1/q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroCharge
from .fields import SolenoidField
from .geometry import ClosedPath, QuadratureSpec, circulation

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PhaseFactor:
    """Angle theta of a unit phase factor exp(-i*theta), kept in [0, 2*pi).

    Equality on the circle is tolerance-based and wrap-aware: angles just
    above 0 and just below 2*pi compare close.
    """

    angle: float

    def __post_init__(self):
        if not math.isfinite(self.angle):
            raise ValueError(f"phase angle must be finite, got {self.angle!r}")
        reduced = self.angle % TWO_PI
        if reduced >= TWO_PI:  # float % can round up to the modulus
            reduced -= TWO_PI
        object.__setattr__(self, "angle", reduced)

    @classmethod
    def from_turns(cls, turns: float) -> "PhaseFactor":
        """Build from a turn count, reducing mod 1 before scaling by 2*pi.

        Reducing first keeps integer turn counts at exactly zero angle,
        which is what makes "no observable effect" cases exact.
        """
        if not math.isfinite(turns):
            raise ValueError(f"turn count must be finite, got {turns!r}")
        frac = turns % 1.0
        if frac >= 1.0:
            frac -= 1.0
        return cls(TWO_PI * frac)

    def distance(self, other: "PhaseFactor") -> float:
        """Shortest angular distance on the circle."""
        d = abs(self.angle - other.angle)
        return min(d, TWO_PI - d)

    def isclose(self, other: "PhaseFactor", tol: float = 1e-9) -> bool:
        return self.distance(other) <= tol

    def as_complex(self) -> complex:
        return complex(math.cos(self.angle), -math.sin(self.angle))


def holonomy(
    f: SolenoidField,
    path: ClosedPath,
    q: float,
    spec: QuadratureSpec | None = None,
) -> PhaseFactor:
    """Loop phase q * circulation(f, path), reduced mod 2*pi."""
    return PhaseFactor(q * circulation(f, path, spec))


def phase_closed_form(q: float, gamma: float, w: int) -> PhaseFactor:
    """Closed-form loop phase 2*pi*q*gamma*w mod 2*pi, no quadrature."""
    return PhaseFactor.from_turns(q * gamma * w)


def phases_equivalent(q: float, gamma1: float, gamma2: float, tol: float = 1e-9) -> bool:
    """True when gamma1 and gamma2 give the same loop phase for charge q.

    Equivalent to q*(gamma1 - gamma2) being an integer (within tol):
    the exterior parameter is observable only through its class mod 1/q.
    """
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    x = q * (gamma1 - gamma2)
    return abs(x - round(x)) <= tol


def periodicity_check(q: float, gamma: float) -> bool:
    """Confirm the loop phase is periodic in gamma with period 1/q."""
    if q == 0:
        raise ZeroCharge("period 1/q is undefined for q = 0")
    shifted = phase_closed_form(q, gamma + 1.0 / q, 1)
    return shifted.isclose(phase_closed_form(q, gamma, 1), tol=1e-12)


@dataclass(frozen=True)
class InterferometerGeometry:
    """Two-beam far-field fringe geometry."""

    slit_separation: float
    screen_distance: float
    wavenumber: float
    half_extent: float
    samples: int = 201

    def __post_init__(self):
        for name in ("slit_separation", "screen_distance", "wavenumber", "half_extent"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
        if self.samples < 2:
            raise ValueError(f"samples must be at least 2, got {self.samples!r}")


def interference(
    f: SolenoidField, q: float, geom: InterferometerGeometry
) -> list[tuple[float, float]]:
    """Screen intensity 1 + cos(k*d*x/D - dphi), sampled uniformly.

    dphi = 2*pi*((q*gamma) mod 1) is the one-turn loop phase, so the
    pattern is the gamma = 0 pattern rigidly shifted by (q*gamma mod 1)
    fringes.  Integer q*gamma shifts by whole fringes: indistinguishable
    from no solenoid at all.  A pure-gauge exterior (B = 0, gamma != 0)
    still shifts the pattern; that is the observable the phase carries.
    """
    shift = (q * f.gamma) % 1.0
    if shift >= 1.0:
        shift -= 1.0
    dphi = TWO_PI * shift
    k_eff = geom.wavenumber * geom.slit_separation / geom.screen_distance
    n = geom.samples
    extent = geom.half_extent
    step = 2.0 * extent / (n - 1)
    rows = []
    for i in range(n):
        x = -extent + i * step
        rows.append((x, 1.0 + math.cos(k_eff * x - dphi)))
    return rows


def interference_csv(rows: list[tuple[float, float]]) -> str:
    """Render (x, intensity) rows as "x,intensity" CSV text."""
    lines = ["x,intensity"]
    for x, intensity in rows:
        lines.append(f"{x:.12g},{intensity:.12g}")
    return "\n".join(lines) + "\n"
