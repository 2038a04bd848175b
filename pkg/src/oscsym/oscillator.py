"""Two coupled oscillators: mass reduction, normal form and spectra.

Units follow the reduced form: positions in ``(mK)^(1/4)``, momenta in
``(mK)^(-1/4)`` and energies in ``omega = sqrt(K/m)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .catalog import Ordering, permutation_matrix
from .errors import InadmissibleParameters

__all__ = [
    "RawParams",
    "ReducedParams",
    "NormalForm",
    "Spectrum",
    "HamiltonianForm",
    "reduce",
    "normal_form",
    "reconstruct",
    "spectrum",
    "quadratic_form",
    "flow_generator",
    "coupling_strength",
]


def _check_potential(a, b, c, what="A, B") -> None:
    if not (a > 0 and b > 0):
        raise InadmissibleParameters(f"{what} must be positive, got {a}, {b}")
    if not 4 * a * b - c * c > 0:
        raise InadmissibleParameters(f"4AB - C^2 = {4 * a * b - c * c} must be positive")


@dataclass(frozen=True)
class RawParams:
    m1: float
    m2: float
    Aprime: float
    Bprime: float
    Cprime: float

    def __post_init__(self):
        if not (self.m1 > 0 and self.m2 > 0):
            raise InadmissibleParameters(f"masses must be positive, got {self.m1}, {self.m2}")
        _check_potential(self.Aprime, self.Bprime, self.Cprime, "A', B'")


@dataclass(frozen=True)
class ReducedParams:
    m: float
    A: float
    B: float
    C: float

    def __post_init__(self):
        if not self.m > 0:
            raise InadmissibleParameters(f"mass must be positive, got {self.m}")
        _check_potential(self.A, self.B, self.C)


@dataclass(frozen=True)
class NormalForm:
    K: float
    eta: float
    alpha: float
    omega: float = 1.0
    # (cos alpha, sin alpha) at full precision; a float alpha near +-pi
    # cannot carry sin(alpha) to better than ~1e-12 relative
    direction: tuple | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.K > 0:
            raise InadmissibleParameters(f"K must be positive, got {self.K}")


def reduce(raw: RawParams) -> ReducedParams:
    """Rescale ``x1, x2`` canonically so both kinetic terms share ``m = sqrt(m1 m2)``.

    ``x1 -> (m2/m1)^(1/4) x1`` and ``x2 -> (m1/m2)^(1/4) x2`` with reciprocal
    momentum scalings; the cross term is untouched because the two factors
    cancel.
    """
    ratio = raw.m2 / raw.m1
    return ReducedParams(
        m=math.sqrt(raw.m1 * raw.m2),
        A=raw.Aprime * math.sqrt(ratio),
        B=raw.Bprime / math.sqrt(ratio),
        C=raw.Cprime,
    )


def coupling_strength(A, B, C):
    """``K = sqrt(AB - C^2/4)``, exact when the radicand is a rational square."""
    exact = all(isinstance(v, (int, Fraction)) for v in (A, B, C))
    radicand = Fraction(A) * B - Fraction(C) ** 2 / 4 if exact else A * B - C * C / 4
    if radicand <= 0:
        raise InadmissibleParameters("AB - C^2/4 must be positive")
    if exact:
        p, q = radicand.numerator, radicand.denominator
        rp, rq = math.isqrt(p), math.isqrt(q)
        if rp * rp == p and rq * rq == q:
            return Fraction(rp, rq)
    return math.sqrt(radicand)


def normal_form(p: ReducedParams) -> NormalForm:
    A, B, C = float(p.A), float(p.B), float(p.C) + 0.0  # +0.0 folds -0.0 into 0.0
    r = math.hypot(A - B, C)
    if C == 0 and A == B:
        # alpha is undefined here; any angle works because eta = 0, pick 0
        alpha, direction = 0.0, (1.0, 0.0)
    else:
        alpha, direction = math.atan2(C, B - A), ((B - A) / r, C / r)
    K = math.sqrt(A * B - C * C / 4)
    s = math.sqrt(4 * A * B - C * C)
    # (A + B + r)/s - 1 without cancellation: A + B - s = r^2 / (A + B + s)
    excess = (r + r * r / (A + B + s)) / s
    eta = -0.5 * math.log1p(excess)
    return NormalForm(K=K, eta=eta, alpha=alpha, omega=math.sqrt(K / p.m), direction=direction)


def reconstruct(nf: NormalForm):
    """Potential coefficients ``(A, B, C)`` from ``(K, eta, alpha)``."""
    K, eta = nf.K, nf.eta
    cos_a, sin_a = nf.direction or (math.cos(nf.alpha), math.sin(nf.alpha))
    # half-angle squares, taking the cancellation-free branch for each
    if cos_a >= 0:
        c2 = (1 + cos_a) / 2
        s2 = sin_a * sin_a / (4 * c2)
    else:
        s2 = (1 - cos_a) / 2
        c2 = sin_a * sin_a / (4 * s2)
    up, down = math.exp(2 * eta), math.exp(-2 * eta)
    A = K * (up * c2 + down * s2)
    B = K * (up * s2 + down * c2)
    C = -2 * K * math.sinh(2 * eta) * sin_a
    return A, B, C


class Spectrum(str, enum.Enum):
    COUPLED = "coupled"
    UNCOUPLED = "uncoupled"


def spectrum(nf: NormalForm | None, n1: int, n2: int, variant=Spectrum.COUPLED) -> float:
    """Energy level in units of omega.

    The uncoupled levels are ``n1 + n2 + 1``; the coupled ones weight the
    two excitation numbers by the normal-mode factors ``e^eta`` and
    ``e^-eta`` while keeping the unit zero-point term.
    """
    if n1 < 0 or n2 < 0 or int(n1) != n1 or int(n2) != n2:
        raise ValueError(f"excitation numbers must be non-negative integers, got {n1}, {n2}")
    variant = Spectrum(variant)
    if variant is Spectrum.UNCOUPLED:
        return float(n1 + n2 + 1)
    if nf is None:
        raise ValueError("the coupled spectrum needs a normal form")
    return math.exp(nf.eta) * n1 + math.exp(-nf.eta) * n2 + 1.0


class HamiltonianForm(str, enum.Enum):
    H = "H"                # the general coupled form in normal-mode variables
    HPRIME = "Hprime"      # reachable from the decoupled form canonically
    DECOUPLED = "decoupled"


def quadratic_form(variant, eta: float = 0.0, ordering=Ordering.INTERLEAVED) -> np.ndarray:
    """Symmetric ``Q`` with ``H = zeta^T Q zeta / 2`` in normal-mode coordinates.

    ``zeta = (y1, q1, y2, q2)`` for the interleaved ordering, or
    ``(y1, y2, q1, q2)`` for the traditional one.
    """
    variant = HamiltonianForm(variant)
    if variant is HamiltonianForm.DECOUPLED:
        diag = [1.0, 1.0, 1.0, 1.0]
    elif variant is HamiltonianForm.HPRIME:
        diag = [math.exp(eta), math.exp(-eta), math.exp(-eta), math.exp(eta)]
    else:
        diag = [math.exp(2 * eta), 1.0, math.exp(-2 * eta), 1.0]
    q = np.diag(diag)
    if Ordering.parse(ordering) is Ordering.TRADITIONAL:
        p = permutation_matrix().to_numpy(float)
        q = p @ q @ p.T
    return q


def flow_generator(Q: np.ndarray, J) -> np.ndarray:
    """``J @ Q``, the matrix of Hamilton's equations for ``H = zeta^T Q zeta / 2``."""
    Q = np.asarray(Q, dtype=float)
    if Q.shape != (4, 4) or not np.allclose(Q, Q.T, atol=1e-14):
        raise ValueError("Q must be a symmetric 4x4 matrix")
    J = getattr(J, "array", J)
    return np.asarray(J, dtype=float) @ Q
