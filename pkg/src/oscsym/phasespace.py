"""Symplectic forms, one-parameter transformations and Gaussian Wigner states.

Group elements are ``M(theta) = exp(i theta X)`` for a catalog generator
``X``; every generator satisfies ``i X`` real, so ``M`` is a real matrix.
States use the unit system where the vacuum covariance is ``I/2`` and the
uncertainty floor for every symplectic eigenvalue is ``1/2``.

With this convention ``exp(i theta G3)`` for ``theta > 0`` contracts the
phase space of the first oscillator and expands that of the second.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from . import catalog
from .catalog import GENERATOR_NAMES, ROTATION_NAMES, Ordering
from .errors import OrderingMismatch
from .exactnum import ExactMatrix, I, identity, is_zero, mat_mul, scalar_mul, transpose

__all__ = [
    "SymplecticForm",
    "GroupElement",
    "GaussianState",
    "j_matrix",
    "form_from_rotation",
    "exp_generator",
    "is_canonical",
    "canonical_deviation",
    "generator_is_canonical",
    "classify_generators",
    "vacuum_state",
    "coupled_ground_state",
    "transform_state",
    "symplectic_eigenvalues",
    "uncertainty_ok",
    "wigner_eval",
    "UNCERTAINTY_FLOOR",
]

UNCERTAINTY_FLOOR = 0.5
CANONICAL_TOL = 1e-12
GATE_TOL = 1e-12


@dataclass(frozen=True)
class SymplecticForm:
    """A real antisymmetric ``J`` with ``J^2 = -I``, tied to an ordering."""

    J: ExactMatrix
    ordering: Ordering = Ordering.INTERLEAVED

    def __post_init__(self):
        J = self.J if isinstance(self.J, ExactMatrix) else ExactMatrix(np.asarray(self.J).tolist())
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "ordering", Ordering.parse(self.ordering))
        if J.n != 4 or not J.is_real():
            raise ValueError("J must be a real 4x4 matrix")
        if transpose(J) != -J:
            raise ValueError("J must be antisymmetric")
        if mat_mul(J, J) != -identity(4):
            raise ValueError("J must square to -I")

    @property
    def array(self) -> np.ndarray:
        return self.J.to_numpy(float)


def j_matrix(ordering=Ordering.INTERLEAVED) -> SymplecticForm:
    ordering = Ordering.parse(ordering)
    if ordering is Ordering.INTERLEAVED:
        rows = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    else:
        rows = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    return SymplecticForm(ExactMatrix(rows), ordering)


def form_from_rotation(name: str, ordering=Ordering.INTERLEAVED) -> SymplecticForm:
    """The alternative form ``2 i X`` built from one of the six rotation generators.

    ``2 i S3`` reproduces the physical ``J``; the other five give the forms
    under which the remaining ten-generator subalgebras are canonical.
    """
    if name not in ROTATION_NAMES:
        raise ValueError(f"{name} is not a rotation generator")
    return SymplecticForm(scalar_mul(2 * I, catalog.generator(name, ordering)), ordering)


@dataclass(frozen=True)
class GroupElement:
    M: np.ndarray
    provenance: tuple = ()  # ((name, theta), ...) applied right to left
    ordering: Ordering = Ordering.INTERLEAVED

    def __post_init__(self):
        M = np.array(self.M, dtype=float)
        if M.shape != (4, 4):
            raise ValueError("group elements are real 4x4 matrices")
        M.setflags(write=False)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "ordering", Ordering.parse(self.ordering))

    def __matmul__(self, other: GroupElement) -> GroupElement:
        if other.ordering is not self.ordering:
            raise OrderingMismatch("cannot compose elements in different orderings")
        return GroupElement(self.M @ other.M, self.provenance + other.provenance, self.ordering)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.M))


def _real_generator(name: str, ordering) -> np.ndarray:
    """``i X`` as a real float array."""
    return scalar_mul(I, catalog.generator(name, ordering)).to_numpy(float)


def exp_generator(name: str, theta: float, ordering=Ordering.INTERLEAVED) -> GroupElement:
    """``exp(i theta X)`` for the catalog generator ``name``."""
    ordering = Ordering.parse(ordering)
    M = expm(theta * _real_generator(name, ordering))
    return GroupElement(M, ((name, float(theta)),), ordering)


def canonical_deviation(M, form: SymplecticForm) -> float:
    """``max |M J M^T - J|``."""
    if isinstance(M, GroupElement):
        if M.ordering is not form.ordering:
            raise OrderingMismatch(f"element is {M.ordering.value}, form is {form.ordering.value}")
        M = M.M
    J = form.array
    M = np.asarray(M, dtype=float)
    return float(np.max(np.abs(M @ J @ M.T - J)))


def is_canonical(M, form: SymplecticForm, tol: float | None = None) -> bool:
    """Whether ``M J M^T = J``; exact for :class:`ExactMatrix` input."""
    if isinstance(M, ExactMatrix):
        return mat_mul(mat_mul(M, form.J), transpose(M)) == form.J
    return canonical_deviation(M, form) <= (CANONICAL_TOL if tol is None else tol)


def generator_is_canonical(name: str, form: SymplecticForm) -> bool:
    """Exact infinitesimal test ``Y J + J Y^T = 0`` with ``Y = i X``."""
    Y = scalar_mul(I, catalog.generator(name, form.ordering))
    return is_zero(mat_mul(Y, form.J) + mat_mul(form.J, transpose(Y)))


def classify_generators(form: SymplecticForm):
    """Split the fifteen names into (canonical, noncanonical) frozensets for ``form``."""
    canon = frozenset(n for n in GENERATOR_NAMES if generator_is_canonical(n, form))
    return canon, frozenset(GENERATOR_NAMES) - canon


@dataclass(frozen=True)
class GaussianState:
    mean: np.ndarray
    cov: np.ndarray
    ordering: Ordering = Ordering.INTERLEAVED

    def __post_init__(self):
        mean = np.array(self.mean, dtype=float).reshape(-1)
        cov = np.array(self.cov, dtype=float)
        if mean.shape != (4,) or cov.shape != (4, 4):
            raise ValueError("a two-mode Gaussian state has a 4-vector mean and 4x4 covariance")
        scale = max(1.0, float(np.max(np.abs(cov))))
        if np.max(np.abs(cov - cov.T)) > 1e-14 * scale:
            raise ValueError("covariance must be symmetric")
        cov = (cov + cov.T) / 2
        if np.min(np.linalg.eigvalsh(cov)) <= 0:
            raise ValueError("covariance must be positive definite")
        mean.setflags(write=False)
        cov.setflags(write=False)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "ordering", Ordering.parse(self.ordering))

    def to_json(self) -> dict:
        return {
            "mean": self.mean.tolist(),
            "cov": self.cov.tolist(),
            "ordering": self.ordering.value,
        }

    @classmethod
    def from_json(cls, obj) -> GaussianState:
        try:
            return cls(obj["mean"], obj["cov"], obj.get("ordering", "interleaved"))
        except KeyError as exc:
            raise ValueError(f"state JSON lacks {exc}") from None


def vacuum_state(ordering=Ordering.INTERLEAVED) -> GaussianState:
    return GaussianState(np.zeros(4), np.eye(4) / 2, ordering)


def coupled_ground_state(eta: float, alpha: float, ordering=Ordering.INTERLEAVED) -> GaussianState:
    """Ground state of the coupled pair, read off its Wigner exponent.

    The exponent is ``-zeta^T A zeta`` with ``A`` assembled term by term
    from the rotated coordinates ``x1 cos(a/2) - x2 sin(a/2)`` and
    ``x1 sin(a/2) + x2 cos(a/2)`` (same for the momenta); the covariance is
    ``A^-1 / 2``.
    """
    c, s = math.cos(alpha / 2), math.sin(alpha / 2)
    up, down = math.exp(eta), math.exp(-eta)
    # rows are the coefficient vectors of the four squared terms on (x1, p1, x2, p2)
    terms = [
        (up, np.array([c, 0, -s, 0])),
        (down, np.array([s, 0, c, 0])),
        (down, np.array([0, c, 0, -s])),
        (up, np.array([0, s, 0, c])),
    ]
    A = sum(w * np.outer(v, v) for w, v in terms)
    cov = np.linalg.inv(A) / 2
    state = GaussianState(np.zeros(4), (cov + cov.T) / 2, Ordering.INTERLEAVED)
    if Ordering.parse(ordering) is Ordering.TRADITIONAL:
        P = catalog.permutation_matrix().to_numpy(float)
        state = GaussianState(P @ state.mean, P @ state.cov @ P.T, Ordering.TRADITIONAL)
    return state


def transform_state(s: GaussianState, M) -> GaussianState:
    if isinstance(M, GroupElement):
        if M.ordering is not s.ordering:
            raise OrderingMismatch(f"element is {M.ordering.value}, state is {s.ordering.value}")
        M = M.M
    M = np.asarray(M, dtype=float)
    cov = M @ s.cov @ M.T
    return GaussianState(M @ s.mean, (cov + cov.T) / 2, s.ordering)


def symplectic_eigenvalues(s: GaussianState):
    """Williamson values ``(nu1, nu2)``, ascending, from the spectrum of ``J cov``."""
    J = j_matrix(s.ordering).array
    ev = np.sort(np.abs(np.linalg.eigvals(J @ s.cov)))
    # eigenvalues come in pairs +-i nu
    return float((ev[0] + ev[1]) / 2), float((ev[2] + ev[3]) / 2)


def uncertainty_ok(s: GaussianState, tol: float = GATE_TOL) -> bool:
    """Quantum admissibility: no symplectic eigenvalue below ``1/2``."""
    return min(symplectic_eigenvalues(s)) >= UNCERTAINTY_FLOOR - tol


def wigner_eval(s: GaussianState, point) -> float:
    """Normalized Gaussian Wigner function at a phase-space point."""
    z = np.asarray(point, dtype=float) - s.mean
    det = np.linalg.det(s.cov)
    if det <= 0:
        raise ValueError("singular covariance")
    q = z @ np.linalg.solve(s.cov, z)
    return float(np.exp(-0.5 * q) / ((2 * np.pi) ** 2 * math.sqrt(det)))
