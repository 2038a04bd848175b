"""Two independent realizations of the generators.

* Truncated Fock-space operators built from ladder matrices, available for
  the ten Sp(4) members only.
* First-order phase-space differential operators
  ``D = sum_ab zeta_a C_ab d/dzeta_b`` on ``zeta = (x1, p1, x2, p2)``,
  stored through their exact coefficient matrix ``C``.

For the differential operators ``[D_C, D_C'] = D_{CC' - C'C}``, and the
coefficient matrix of each generator is ``C = -X^T``; since
``[-X^T, -Y^T] = -[X, Y]^T`` the map is a Lie-algebra homomorphism.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import StructureTable, commutator
from .catalog import GENERATOR_NAMES, NONCANONICAL, SP4_MEMBERS, sp4_generator
from .errors import CatalogMiss, NoQuantumRealization
from .exactnum import ExactMatrix, GaussRational, transpose
from .relations import lie_sp4

__all__ = [
    "ladder",
    "hatted",
    "realized",
    "guarded_mask",
    "fock_commutator_check",
    "fock_residual_table",
    "CORRESPONDENCE_SIGN",
    "DiffOpCoeff",
    "diffop",
    "diffop_to_matrix",
    "diffop_commutator",
    "op_form",
    "COORDS",
]

COORDS = ("x1", "p1", "x2", "p2")
MIN_CUTOFF = 4

# --------------------------------------------------------------------------
# Fock space
# --------------------------------------------------------------------------


def ladder(N: int):
    """``(a1, a1_dag, a2, a2_dag)`` on levels ``0..N-1`` of each mode, mode 1 outermost."""
    if int(N) != N or N < MIN_CUTOFF:
        raise ValueError(f"cutoff must be an integer >= {MIN_CUTOFF}, got {N}")
    N = int(N)
    a = np.diag(np.sqrt(np.arange(1, N, dtype=float)), 1).astype(complex)
    eye = np.eye(N)
    a1, a2 = np.kron(a, eye), np.kron(eye, a)
    return a1, a1.conj().T, a2, a2.conj().T


def hatted(name: str, N: int) -> np.ndarray:
    """The hatted operator ``name`` as printed, an ``N^2 x N^2`` complex matrix."""
    if name in NONCANONICAL:
        raise NoQuantumRealization(f"{name} has no Fock-space realization")
    if name not in SP4_MEMBERS:
        raise CatalogMiss(f"unknown generator name {name!r}")
    a1, b1, a2, b2 = ladder(N)  # b = dagger
    if name == "L1":
        return (b1 @ a2 + b2 @ a1) / 2
    if name == "L2":
        return (b1 @ a2 - b2 @ a1) / 2j
    if name == "L3":
        return (b1 @ a1 - b2 @ a2) / 2
    if name == "S3":
        return (b1 @ a1 + a2 @ b2) / 2
    if name == "K1":
        return -(b1 @ b1 + a1 @ a1 - b2 @ b2 - a2 @ a2) / 4
    if name == "K2":
        return 1j * (b1 @ b1 - a1 @ a1 + b2 @ b2 - a2 @ a2) / 4
    if name == "K3":
        return (b1 @ b2 + a1 @ a2) / 2
    if name == "Q1":
        return -1j * (b1 @ b1 - a1 @ a1 - b2 @ b2 + a2 @ a2) / 4
    if name == "Q2":
        return -(b1 @ b1 + a1 @ a1 + b2 @ b2 + a2 @ a2) / 4
    return 1j * (b1 @ b2 - a1 @ a2) / 2  # Q3


# The printed hatted operators close on the Sp(4) table only if S3 is
# matched with minus its hatted form; with the literal matching the nine
# pairs involving S3 with K or Q and [K_i, Q_i] come out with the wrong sign.
CORRESPONDENCE_SIGN = {n: (-1 if n == "S3" else 1) for n in sorted(SP4_MEMBERS)}


def realized(name: str, N: int, *, literal: bool = False) -> np.ndarray:
    """Operator matched with the matrix generator ``name``."""
    sign = 1 if literal else CORRESPONDENCE_SIGN[name]
    return sign * hatted(name, N)


def guarded_mask(N: int) -> np.ndarray:
    """Boolean mask of basis states with ``n1 + n2 <= N - 3``."""
    n1, n2 = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    return ((n1 + n2) <= N - 3).reshape(-1)


def fock_commutator_check(x: str, y: str, N: int = 12, *, literal: bool = False,
                          table: StructureTable | None = None) -> float:
    """Max-norm residual of ``[X, Y] - sum_k f_k Z_k`` on the guarded block."""
    for n in (x, y):
        if n not in SP4_MEMBERS:
            if n in NONCANONICAL:
                raise NoQuantumRealization(f"{n} has no Fock-space realization")
            raise CatalogMiss(f"unknown generator name {n!r}")
    table = table if table is not None else lie_sp4()
    X, Y = realized(x, N, literal=literal), realized(y, N, literal=literal)
    resid = X @ Y - Y @ X
    for k, coeff in table.lookup(x, y).items():
        resid = resid - complex(coeff) * realized(k, N, literal=literal)
    g = guarded_mask(N)
    return float(np.max(np.abs(resid[np.ix_(g, g)])))


def fock_residual_table(N: int = 12, *, literal: bool = False) -> dict:
    """Residuals for all 45 Sp(4) pairs, keyed by ``(x, y)`` in catalog order."""
    table = lie_sp4()
    names = [n for n in GENERATOR_NAMES if n in SP4_MEMBERS]
    return {
        (x, y): fock_commutator_check(x, y, N, literal=literal, table=table)
        for x, y in itertools.combinations(names, 2)
    }


# --------------------------------------------------------------------------
# Differential operators
# --------------------------------------------------------------------------

_HALF_I = GaussRational(0, Fraction(1, 2))


@dataclass(frozen=True)
class DiffOpCoeff:
    """``D = coeff * sum_t s_t a_t d/db_t`` for terms ``(s_t, a_t, b_t)``."""

    name: str
    coeff: GaussRational
    terms: tuple
    note: str = ""

    @property
    def C(self) -> ExactMatrix:
        entries = {}
        for s, a, b in self.terms:
            key = (COORDS.index(a), COORDS.index(b))
            entries[key] = entries.get(key, GaussRational(0)) + self.coeff * s
        return ExactMatrix.from_sparse(4, entries)

    def to_json(self) -> dict:
        out = {"name": self.name, "matrix": self.C.to_json(), "op_form": op_form(self)}
        if self.note:
            out["note"] = self.note
        return out


def _t(text: str):
    """Parse ``"+x1 p2 -p2 x1"`` into ``((1,'x1','p2'), (-1,'p2','x1'))``."""
    toks = text.split()
    out = []
    for a, b in zip(toks[::2], toks[1::2]):
        out.append((-1 if a[0] == "-" else 1, a.lstrip("+-"), b))
    return tuple(out)


_P, _M = _HALF_I, -_HALF_I

# printed operators: coefficient and (sign, coordinate, derivative) terms
_PRINTED = {
    "L1": (_P, _t("+x1 p2 -p2 x1 +x2 p1 -p1 x2")),
    "L2": (_M, _t("+x1 x2 -x2 x1 +p1 p2 -p2 p1")),
    "L3": (_P, _t("+x1 p1 -p1 x1 -x2 p2 +p2 x2")),
    "S3": (_M, _t("+x1 p1 -p1 x1 +x2 p2 -p2 x2")),
    "K1": (_M, _t("+x1 p1 +p1 x1 -x2 p2 -p2 x2")),
    "K2": (_M, _t("+x1 x1 -p1 p1 +x2 x2 -p2 p2")),
    "K3": (_P, _t("+x1 p2 +p2 x1 +x2 p1 +p1 x2")),
    "Q1": (_P, _t("+x1 x1 -p1 p1 -x2 x2 +p2 p2")),
    "Q2": (_M, _t("+x1 p1 +p1 x1 +x2 p2 +p2 x2")),
    "Q3": (_M, _t("+x2 x1 +x1 x2 -p2 p1 -p1 p2")),
    "S1": (_P, _t("+x1 x2 -x2 x1 -p1 p2 +p2 p1")),
    "S2": (_M, _t("+x1 p2 -p2 x1 +x2 p1 -p1 x2")),
    "G1": (_M, _t("+x1 x2 +x2 x1 +p1 p2 +p2 p1")),
    "G2": (_P, _t("+x1 p2 +p2 x1 -x2 p1 -p1 x2")),
    "G3": (_M, _t("+x1 x1 +p1 p1 +x2 p1 +p1 x2")),
}

_CORRECTED = {
    "S2": (
        (_P, _t("+x1 p2 -p2 x1 -x2 p1 +p1 x2")),
        "printed form equals -L1; the corrected form matches the corrected S2 matrix",
    ),
    "G2": (
        (_M, _t("+x1 p2 +p2 x1 -x2 p1 -p1 x2")),
        "printed overall sign reversed",
    ),
    "G3": (
        (_M, _t("+x1 x1 +p1 p1 -x2 x2 -p2 p2")),
        "printed term (x2 d/dp1 + p1 d/dx2) replaced by -(x2 d/dx2 + p2 d/dp2)",
    ),
}


def diffop(name: str, *, printed: bool = False) -> DiffOpCoeff:
    """Differential operator for ``name``; corrected unless ``printed``."""
    if name not in _PRINTED:
        raise CatalogMiss(f"unknown generator name {name!r}")
    if not printed and name in _CORRECTED:
        (coeff, terms), note = _CORRECTED[name]
        return DiffOpCoeff(name, coeff, terms, note)
    coeff, terms = _PRINTED[name]
    return DiffOpCoeff(name, coeff, terms)


def diffop_to_matrix(d: DiffOpCoeff) -> ExactMatrix:
    return d.C


def expected_matrix(name: str) -> ExactMatrix:
    """``-X^T`` for the catalog generator, the image a correct operator must have."""
    return -transpose(sp4_generator(name))


def diffop_commutator(d1: DiffOpCoeff, d2: DiffOpCoeff) -> ExactMatrix:
    """Coefficient matrix of ``[D1, D2]``, namely ``C1 C2 - C2 C1``."""
    return commutator(d1.C, d2.C)


def _fmt_coeff(c: GaussRational) -> str:
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        sign = "-" if c.im < 0 else ""
        mag = abs(c.im)
        body = "i" if mag == 1 else f"i/{mag.denominator}" if mag.numerator == 1 else f"{mag}i"
        return f"{sign}({body})"
    return f"({c})"


def op_form(d: DiffOpCoeff) -> str:
    """Render e.g. ``-(i/2)[x1 d/dp1 - p1 d/dx1 + ...]``."""
    parts = []
    for k, (s, a, b) in enumerate(d.terms):
        term = f"{a} d/d{b}"
        if k == 0:
            parts.append(term if s > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if s > 0 else '-'} {term}")
    return f"{_fmt_coeff(d.coeff)}[{' '.join(parts)}]"
