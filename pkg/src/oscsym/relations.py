"""Bracket relations as printed, encoded as (possibly partial) structure tables.

Each table is built from index rules such as ``[L_i, K_j] = i eps_ijk K_k``
rather than listed pair by pair, so the encoding mirrors the printed lines.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import StructureTable
from .catalog import GENERATOR_NAMES
from .exactnum import GaussRational

__all__ = [
    "Deviation",
    "lie_sp4",
    "grand_table",
    "g3_derivation",
    "so21",
    "coupling_relations",
    "SO21_TRIPLES",
    "UNREPRODUCED_SO21_TRIPLES",
    "KNOWN_DEVIATIONS",
]

_i = GaussRational(0, 1)
_mi = GaussRational(0, -1)
_IDX = (1, 2, 3)


def _eps(i, j, k):
    return ((i - j) * (j - k) * (k - i)) // 2


class _Builder:
    def __init__(self):
        self.table = {}

    def set(self, a, b, terms):
        if a == b:
            return
        terms = {k: v for k, v in terms.items() if v}
        # a later printed line never silently overrides an earlier one
        key = (a, b) if (b, a) not in self.table else (b, a)
        if key != (a, b):
            terms = {k: -v for k, v in terms.items()}
        if key in self.table and self.table[key] != terms:
            raise ValueError(f"conflicting printed entries for [{a},{b}]")
        self.table[key] = terms

    def eps(self, x, y, coeff, z):
        """``[x_i, y_j] = coeff * eps_ijk z_k``."""
        for i, j in itertools.product(_IDX, _IDX):
            terms = {}
            for k in _IDX:
                e = _eps(i, j, k)
                if e:
                    terms[f"{z}{k}"] = coeff * e
            self.set(f"{x}{i}", f"{y}{j}", terms)

    def delta(self, x, y, coeff, z):
        """``[x_i, y_j] = coeff * delta_ij z``."""
        for i, j in itertools.product(_IDX, _IDX):
            self.set(f"{x}{i}", f"{y}{j}", {z: coeff} if i == j else {})

    def index(self, x, y, coeff, z):
        """``[x_i, y] = coeff * z_i`` (``coeff = 0`` for commuting)."""
        for i in _IDX:
            self.set(f"{x}{i}", y, {f"{z}{i}": coeff} if z else {})

    def zero(self, x, y):
        for i, j in itertools.product(_IDX, _IDX):
            self.set(f"{x}{i}", f"{y}{j}", {})

    def pair(self, a, b, terms):
        self.set(a, b, terms)

    def build(self, labels) -> StructureTable:
        return StructureTable(tuple(labels), dict(self.table))


_SP4_LABELS = tuple(n for n in GENERATOR_NAMES if n not in ("S1", "S2", "G1", "G2", "G3"))


def lie_sp4() -> StructureTable:
    """The ten-generator Sp(4) relations (45 pairs)."""
    b = _Builder()
    b.eps("L", "L", _i, "L")
    b.index("L", "S3", 0, None)
    b.eps("L", "K", _i, "K")
    b.eps("L", "Q", _i, "Q")
    b.eps("K", "K", _mi, "L")
    b.eps("Q", "Q", _mi, "L")
    b.delta("K", "Q", _mi, "S3")
    b.index("K", "S3", _mi, "Q")
    b.index("Q", "S3", _i, "K")
    return b.build(_SP4_LABELS)


def grand_table(*, corrected: bool = True) -> StructureTable:
    """The fifteen-generator relations.

    As printed the ``[K,K] = [Q,Q] = [Q,Q]`` line repeats ``[Q,Q]`` and so
    says nothing about ``[G_i, G_j]``; those three pairs are left out unless
    ``corrected`` fills them with the value the matrices produce.
    """
    b = _Builder()
    b.eps("L", "L", _i, "L")
    b.eps("S", "S", _i, "S")
    b.zero("L", "S")
    b.eps("L", "K", _i, "K")
    b.eps("L", "Q", _i, "Q")
    b.eps("L", "G", _i, "G")
    b.eps("K", "K", _mi, "L")
    b.eps("Q", "Q", _mi, "L")
    if corrected:
        b.eps("G", "G", _mi, "L")
    b.delta("K", "Q", _mi, "S3")
    b.delta("Q", "G", _mi, "S1")
    b.delta("G", "K", _mi, "S2")
    b.index("K", "S3", _mi, "Q")
    b.index("Q", "S3", _i, "K")
    b.index("G", "S3", 0, None)
    b.index("K", "S1", 0, None)
    b.index("Q", "S1", _mi, "G")
    b.index("G", "S1", _i, "Q")
    b.index("K", "S2", _i, "G")
    b.index("Q", "S2", 0, None)
    b.index("G", "S2", _mi, "K")
    return b.build(GENERATOR_NAMES)


def g3_derivation() -> StructureTable:
    """Brackets of G3 used to introduce G1, G2, S1, S2, exactly as printed."""
    b = _Builder()
    for n in ("S3", "L3", "K1", "K2", "Q1", "Q2"):
        b.pair("G3", n, {})
    b.pair("G3", "L1", {"G2": _i})
    b.pair("G3", "L2", {"G1": _mi})
    b.pair("G3", "K3", {"S2": _i})
    b.pair("G3", "Q3", {"S1": _mi})
    return b.build(GENERATOR_NAMES)


def so21(a, b_, c) -> StructureTable:
    """``[a, b] = i c``, ``[b, c] = -i a``, ``[c, a] = i b``."""
    b = _Builder()
    b.pair(a, b_, {c: _i})
    b.pair(b_, c, {a: _mi})
    b.pair(c, a, {b_: _i})
    return b.build((a, b_, c))


SO21_TRIPLES = (
    ("A1", "B1", "C1"),
    ("A2", "B2", "C2"),
    ("Aplus", "Bplus", "Cplus"),
    ("Aplus", "Bminus", "Cminus"),
    ("Aminus", "Bplus", "Cminus"),
    ("Aminus", "Bminus", "Cplus"),
    ("Aplus", "B3", "C3"),
)

# printed as satisfying the same algebra, but [B1, C1] = -i A1 rather than -i A+
UNREPRODUCED_SO21_TRIPLES = (
    ("Aplus", "B1", "C1"),
    ("Aplus", "B2", "C2"),
)

COMBINED_NAMES = ("Aplus", "Bplus", "Cplus", "Aminus", "Bminus", "Cminus", "A0", "A3", "B3", "C3")


def coupling_relations() -> StructureTable:
    """A0 commutes with the plus set and generates A3, B3, C3 from the minus set."""
    b = _Builder()
    for x in ("Aplus", "Bplus", "Cplus"):
        b.pair("A0", x, {})
    b.pair("A0", "Aminus", {"A3": _i})
    b.pair("A0", "Bminus", {"B3": _i})
    b.pair("A0", "Cminus", {"C3": _i})
    b.pair("B3", "C3", {"Aplus": _mi})
    b.pair("C3", "Aplus", {"B3": _i})
    b.pair("Aplus", "B3", {"C3": _i})
    return b.build(COMBINED_NAMES)


@dataclass(frozen=True)
class Deviation:
    key: str
    printed: str
    computed: str
    pairs: tuple


KNOWN_DEVIATIONS = (
    Deviation(
        key="repeated-QQ",
        printed="[K_i,K_j] = [Q_i,Q_j] = [Q_i,Q_j] = -i eps_ijk L_k",
        computed="[G_i,G_j] = -i eps_ijk L_k",
        pairs=(("G1", "G2"), ("G1", "G3"), ("G2", "G3")),
    ),
    Deviation(
        key="S2-sign",
        printed="S2 = (i/2)[[0,-sigma1],[sigma1,0]]",
        computed="S2 = (i/2)[[0,sigma1],[-sigma1,0]]",
        pairs=(
            ("S1", "S2"), ("S1", "S3"), ("S2", "S3"),
            ("S2", "K1"), ("S2", "K2"), ("S2", "K3"),
            ("S2", "G1"), ("S2", "G2"), ("S2", "G3"),
            ("K1", "G1"), ("K2", "G2"), ("K3", "G3"),
        ),
    ),
    Deviation(
        key="G3-derivation-signs",
        printed="[G3,K3] = iS2, [G3,Q3] = -iS1",
        computed="[G3,K3] = -iS2, [G3,Q3] = iS1",
        pairs=(("G3", "K3"), ("G3", "Q3")),
    ),
)
