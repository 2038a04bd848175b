"""Named generator matrices for the two-oscillator phase space and O(3,3).

Three families are stored:

* the fifteen 4x4 SL(4,r) generators in the interleaved ordering
  ``(x1, p1, x2, p2)``, plus the ten Sp(4) generators printed for the
  traditional ordering ``(x1, x2, p1, p2)``;
* the fifteen 6x6 generators acting on ``(x, y, z, s, t, u)``;
* the sixteen single-oscillator and soldered generators ``A1 .. C3, A0``.

Pauli matrices follow the usual convention ``sigma2 = [[0, -i], [i, 0]]``.

The printed interleaved ``S2`` carries a sign slip: it contradicts the
fifteen-generator bracket table in every bracket it enters and breaks the
name-for-name match with the 6x6 set. :func:`sp4_generator` serves the
corrected matrix; ``printed=True`` returns the verbatim transcription and
:data:`ERRATA` documents the difference.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CatalogMiss, NoSingleGenerator
from .exactnum import ExactMatrix, GaussRational, I, ONE, ZERO, mat_mul, scalar_mul, transpose

__all__ = [
    "Ordering",
    "GENERATOR_NAMES",
    "SP4_MEMBERS",
    "NONCANONICAL",
    "ROTATION_NAMES",
    "SECII_NAMES",
    "ERRATA",
    "Erratum",
    "sp4_generator",
    "generator",
    "o33_generator",
    "secII_generator",
    "identification",
    "reorder",
    "permutation_matrix",
    "pauli",
]


class Ordering(str, enum.Enum):
    INTERLEAVED = "interleaved"
    TRADITIONAL = "traditional"

    @classmethod
    def parse(cls, value) -> Ordering:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown ordering {value!r}; use 'interleaved' or 'traditional'") from None


GENERATOR_NAMES = (
    "L1", "L2", "L3",
    "S1", "S2", "S3",
    "K1", "K2", "K3",
    "Q1", "Q2", "Q3",
    "G1", "G2", "G3",
)
SP4_MEMBERS = frozenset({"L1", "L2", "L3", "S3", "K1", "K2", "K3", "Q1", "Q2", "Q3"})
NONCANONICAL = frozenset(GENERATOR_NAMES) - SP4_MEMBERS
ROTATION_NAMES = ("L1", "L2", "L3", "S1", "S2", "S3")

SECII_NAMES = (
    "A1", "B1", "C1",
    "A2", "B2", "C2",
    "Aplus", "Bplus", "Cplus",
    "Aminus", "Bminus", "Cminus",
    "A0", "A3", "B3", "C3",
)

_HALF = Fraction(1, 2)
_Z = GaussRational(0)


def pauli(k: int) -> tuple:
    """Pauli matrix ``sigma_k`` (k = 0 gives the identity) as nested tuples."""
    if k == 0:
        return ((ONE, ZERO), (ZERO, ONE))
    if k == 1:
        return ((ZERO, ONE), (ONE, ZERO))
    if k == 2:
        return ((ZERO, -I), (I, ZERO))
    if k == 3:
        return ((ONE, ZERO), (ZERO, -ONE))
    raise ValueError(f"no Pauli matrix sigma_{k}")


_O2 = ((ZERO, ZERO), (ZERO, ZERO))


def _blk(coeff, tl, tr, bl, br) -> ExactMatrix:
    """``coeff * [[tl, tr], [bl, br]]`` where each block is a signed Pauli code.

    A block code is ``None`` (zero), ``k`` or ``-k`` for ``+-sigma_k``;
    identity is written as ``"I"``/``"-I"``.
    """

    def block(code):
        if code is None:
            return _O2
        sign = -1 if isinstance(code, str) and code.startswith("-") or (isinstance(code, int) and code < 0) else 1
        k = 0 if isinstance(code, str) else abs(code)
        m = pauli(k)
        return tuple(tuple(sign * v for v in row) for row in m)

    b = [[block(tl), block(tr)], [block(bl), block(br)]]
    rows = []
    for br_ in range(2):
        for r in range(2):
            rows.append([coeff * b[br_][bc][r][c] for bc in range(2) for c in range(2)])
    return ExactMatrix(rows)


H = GaussRational(_HALF)        # 1/2
IH = GaussRational(0, _HALF)    # i/2

# -- interleaved ordering (x1, p1, x2, p2), as printed ---------------------
_PRINTED_INTERLEAVED = {
    "L1": _blk(-H, None, 2, 2, None),
    "L2": _blk(IH, None, "-I", "I", None),
    "L3": _blk(-H, 2, None, None, -2),
    "S3": _blk(H, 2, None, None, 2),
    "K1": _blk(IH, 1, None, None, -1),
    "K2": _blk(IH, 3, None, None, 3),
    "K3": _blk(-IH, None, 1, 1, None),
    "Q1": _blk(IH, -3, None, None, 3),
    "Q2": _blk(IH, 1, None, None, 1),
    "Q3": _blk(IH, None, 3, 3, None),
    "G3": _blk(IH, "I", None, None, "-I"),
    "G1": _blk(IH, None, "I", "I", None),
    "G2": _blk(H, None, -2, 2, None),
    "S1": _blk(-IH, None, -3, 3, None),
    "S2": _blk(IH, None, -1, 1, None),
}

# -- traditional ordering (x1, x2, p1, p2), Appendix ------------------------
_PRINTED_TRADITIONAL = {
    "L1": _blk(IH, None, 1, -1, None),
    "L2": _blk(H, 2, None, None, 2),
    "L3": _blk(IH, None, 3, -3, None),
    "S3": _blk(IH, None, "-I", "I", None),
    "K1": _blk(IH, None, 3, 3, None),
    "K2": _blk(IH, "I", None, None, "-I"),
    "K3": _blk(-IH, None, 1, 1, None),
    "Q1": _blk(IH, -3, None, None, 3),
    "Q2": _blk(IH, None, "I", "I", None),
    "Q3": _blk(IH, 1, None, None, -1),
}


@dataclass(frozen=True)
class Erratum:
    name: str
    ordering: Ordering
    printed: ExactMatrix
    corrected: ExactMatrix
    reason: str


ERRATA = {
    ("S2", Ordering.INTERLEAVED): Erratum(
        name="S2",
        ordering=Ordering.INTERLEAVED,
        printed=_PRINTED_INTERLEAVED["S2"],
        corrected=-_PRINTED_INTERLEAVED["S2"],
        reason=(
            "printed sign contradicts [S_i,S_j] = i eps S_k, [K_i,S2] = iG_i, "
            "[G_i,S2] = -iK_i and [G_i,K_j] = -i delta S2; the negated matrix "
            "satisfies all of them and matches the 6x6 S2 bracket-for-bracket"
        ),
    ),
}

# -- 6x6 generators on (x, y, z, s, t, u), 1-based (row, col) as printed ----
_O33_ENTRIES = {
    "L1": {(2, 3): -I, (3, 2): I},
    "L2": {(1, 3): I, (3, 1): -I},
    "L3": {(1, 2): -I, (2, 1): I},
    "K1": {(1, 4): I, (4, 1): I},
    "K2": {(2, 4): I, (4, 2): I},
    "K3": {(3, 4): I, (4, 3): I},
    "Q1": {(1, 5): I, (5, 1): I},
    "Q2": {(2, 5): I, (5, 2): I},
    "Q3": {(3, 5): I, (5, 3): I},
    "S3": {(4, 5): -I, (5, 4): I},
    "S1": {(5, 6): -I, (6, 5): I},
    "S2": {(4, 6): I, (6, 4): -I},
    "G1": {(1, 6): I, (6, 1): I},
    "G2": {(2, 6): I, (6, 2): I},
    "G3": {(3, 6): I, (6, 3): I},
}

# -- section II generators (interleaved only) ------------------------------
_SECII = {
    "A1": _blk(H, 2, None, None, None),
    "B1": _blk(IH, 3, None, None, None),
    "C1": _blk(IH, 1, None, None, None),
    "A2": _blk(H, None, None, None, 2),
    "B2": _blk(IH, None, None, None, 3),
    "C2": _blk(IH, None, None, None, 1),
    "Aplus": _blk(H, 2, None, None, 2),
    "Bplus": _blk(IH, 3, None, None, 3),
    "Cplus": _blk(IH, 1, None, None, 1),
    "Aminus": _blk(H, 2, None, None, -2),
    "Bminus": _blk(IH, 3, None, None, -3),
    "Cminus": _blk(IH, 1, None, None, -1),
    "A0": _blk(IH, None, "-I", "I", None),
    "A3": _blk(H, None, 2, 2, None),
    "B3": _blk(IH, None, 3, 3, None),
    "C3": _blk(IH, None, 1, 1, None),
}

_IDENTIFICATION = {
    "Aplus": (1, "S3"),
    "Aminus": (-1, "L3"),
    "A3": (-1, "L1"),
    "A0": (1, "L2"),
    "Bplus": (1, "K2"),
    "Bminus": (-1, "Q1"),
    "B3": (1, "Q3"),
    "Cplus": (1, "Q2"),
    "Cminus": (1, "K1"),
    "C3": (-1, "K3"),
}


def _check_name(name: str) -> None:
    if name not in GENERATOR_NAMES:
        raise CatalogMiss(f"unknown generator name {name!r}")


def sp4_generator(name: str, ordering=Ordering.INTERLEAVED, *, printed: bool = False) -> ExactMatrix:
    """Return the 4x4 generator ``name`` in the given phase-space ordering.

    The traditional ordering only carries the ten Sp(4) generators; the
    other five are reachable through :func:`generator` or :func:`reorder`.
    ``printed=True`` bypasses :data:`ERRATA`.
    """
    ordering = Ordering.parse(ordering)
    _check_name(name)
    table = _PRINTED_INTERLEAVED if ordering is Ordering.INTERLEAVED else _PRINTED_TRADITIONAL
    if name not in table:
        raise CatalogMiss(f"{name} is not tabulated in the {ordering.value} ordering")
    if not printed and (name, ordering) in ERRATA:
        return ERRATA[name, ordering].corrected
    return table[name]


def generator(name: str, ordering=Ordering.INTERLEAVED) -> ExactMatrix:
    """Like :func:`sp4_generator` but reorders the five extras when needed."""
    ordering = Ordering.parse(ordering)
    _check_name(name)
    if ordering is Ordering.TRADITIONAL and name not in _PRINTED_TRADITIONAL:
        return reorder(sp4_generator(name, Ordering.INTERLEAVED), Ordering.INTERLEAVED, Ordering.TRADITIONAL)
    return sp4_generator(name, ordering)


@lru_cache(maxsize=None)
def o33_generator(name: str) -> ExactMatrix:
    """6x6 generator acting on ``(x, y, z, s, t, u)``."""
    _check_name(name)
    items = {(r - 1, c - 1): v for (r, c), v in _O33_ENTRIES[name].items()}
    return ExactMatrix.from_sparse(6, items)


def secII_generator(name: str) -> ExactMatrix:
    try:
        return _SECII[name]
    except KeyError:
        raise CatalogMiss(f"unknown section-II name {name!r}") from None


def identification(name: str) -> tuple:
    """``(sign, generator)`` with ``secII_generator(name) == sign * sp4_generator(generator)``."""
    if name in ("A1", "B1", "C1", "A2", "B2", "C2"):
        raise NoSingleGenerator(f"{name} is a half of a soldered pair and maps to no single generator")
    try:
        return _IDENTIFICATION[name]
    except KeyError:
        raise CatalogMiss(f"unknown section-II name {name!r}") from None


# position k of the interleaved vector (x1, p1, x2, p2) lands at _PERM[k]
# in the traditional vector (x1, x2, p1, p2)
_PERM = (0, 2, 1, 3)


def permutation_matrix() -> ExactMatrix:
    """``P`` with ``zeta_traditional = P @ zeta_interleaved``."""
    return ExactMatrix.from_sparse(4, {(_PERM[k], k): 1 for k in range(4)})


def reorder(m: ExactMatrix, src, dst) -> ExactMatrix:
    """Conjugate a 4x4 matrix from one coordinate ordering to another."""
    src, dst = Ordering.parse(src), Ordering.parse(dst)
    if m.n != 4:
        raise ValueError("reorder acts on 4x4 phase-space matrices")
    if src is dst:
        raise ValueError("source and target orderings are the same")
    p = permutation_matrix()
    # P is a permutation, so its inverse is its transpose
    if src is Ordering.INTERLEAVED:
        return mat_mul(mat_mul(p, m), transpose(p))
    return mat_mul(mat_mul(transpose(p), m), p)


def times_i(m: ExactMatrix) -> ExactMatrix:
    return scalar_mul(I, m)
