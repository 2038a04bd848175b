"""Printed generator matrices written out entry by entry.

This encoding is deliberately independent of the block-code encoding used
by the catalog: every matrix is spelled as a scale times rows of tokens in
{0, 1, -1, i, -i}.
"""
from __future__ import annotations

from fractions import Fraction

from oscsym.exactnum import ExactMatrix, GaussRational

_TOK = {"0": (0, 0), "1": (1, 0), "-1": (-1, 0), "i": (0, 1), "-i": (0, -1)}
_SCALE = {
    "1/2": GaussRational(Fraction(1, 2)),
    "-1/2": GaussRational(Fraction(-1, 2)),
    "i/2": GaussRational(0, Fraction(1, 2)),
    "-i/2": GaussRational(0, Fraction(-1, 2)),
    "1": GaussRational(1),
}


def literal(scale: str, text: str) -> ExactMatrix:
    rows = [r.split() for r in text.strip().split(";")]
    s = _SCALE[scale]
    return ExactMatrix([[s * GaussRational(*_TOK[t]) for t in row] for row in rows])


INTERLEAVED = {
    "L1": ("-1/2", "0 0 0 -i; 0 0 i 0; 0 -i 0 0; i 0 0 0"),
    "L2": ("i/2", "0 0 -1 0; 0 0 0 -1; 1 0 0 0; 0 1 0 0"),
    "L3": ("-1/2", "0 -i 0 0; i 0 0 0; 0 0 0 i; 0 0 -i 0"),
    "S3": ("1/2", "0 -i 0 0; i 0 0 0; 0 0 0 -i; 0 0 i 0"),
    "K1": ("i/2", "0 1 0 0; 1 0 0 0; 0 0 0 -1; 0 0 -1 0"),
    "K2": ("i/2", "1 0 0 0; 0 -1 0 0; 0 0 1 0; 0 0 0 -1"),
    "K3": ("-i/2", "0 0 0 1; 0 0 1 0; 0 1 0 0; 1 0 0 0"),
    "Q1": ("i/2", "-1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 -1"),
    "Q2": ("i/2", "0 1 0 0; 1 0 0 0; 0 0 0 1; 0 0 1 0"),
    "Q3": ("i/2", "0 0 1 0; 0 0 0 -1; 1 0 0 0; 0 -1 0 0"),
    "G1": ("i/2", "0 0 1 0; 0 0 0 1; 1 0 0 0; 0 1 0 0"),
    "G2": ("1/2", "0 0 0 i; 0 0 -i 0; 0 -i 0 0; i 0 0 0"),
    "G3": ("i/2", "1 0 0 0; 0 1 0 0; 0 0 -1 0; 0 0 0 -1"),
    "S1": ("-i/2", "0 0 -1 0; 0 0 0 1; 1 0 0 0; 0 -1 0 0"),
    "S2": ("i/2", "0 0 0 -1; 0 0 -1 0; 0 1 0 0; 1 0 0 0"),
}

TRADITIONAL = {
    "L1": ("i/2", "0 0 0 1; 0 0 1 0; 0 -1 0 0; -1 0 0 0"),
    "L2": ("1/2", "0 -i 0 0; i 0 0 0; 0 0 0 -i; 0 0 i 0"),
    "L3": ("i/2", "0 0 1 0; 0 0 0 -1; -1 0 0 0; 0 1 0 0"),
    "S3": ("i/2", "0 0 -1 0; 0 0 0 -1; 1 0 0 0; 0 1 0 0"),
    "K1": ("i/2", "0 0 1 0; 0 0 0 -1; 1 0 0 0; 0 -1 0 0"),
    "K2": ("i/2", "1 0 0 0; 0 1 0 0; 0 0 -1 0; 0 0 0 -1"),
    "K3": ("-i/2", "0 0 0 1; 0 0 1 0; 0 1 0 0; 1 0 0 0"),
    "Q1": ("i/2", "-1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 -1"),
    "Q2": ("i/2", "0 0 1 0; 0 0 0 1; 1 0 0 0; 0 1 0 0"),
    "Q3": ("i/2", "0 1 0 0; 1 0 0 0; 0 0 0 -1; 0 0 -1 0"),
}

SECII = {
    "A1": ("1/2", "0 -i 0 0; i 0 0 0; 0 0 0 0; 0 0 0 0"),
    "B1": ("i/2", "1 0 0 0; 0 -1 0 0; 0 0 0 0; 0 0 0 0"),
    "C1": ("i/2", "0 1 0 0; 1 0 0 0; 0 0 0 0; 0 0 0 0"),
    "A2": ("1/2", "0 0 0 0; 0 0 0 0; 0 0 0 -i; 0 0 i 0"),
    "B2": ("i/2", "0 0 0 0; 0 0 0 0; 0 0 1 0; 0 0 0 -1"),
    "C2": ("i/2", "0 0 0 0; 0 0 0 0; 0 0 0 1; 0 0 1 0"),
    "Aplus": ("1/2", "0 -i 0 0; i 0 0 0; 0 0 0 -i; 0 0 i 0"),
    "Bplus": ("i/2", "1 0 0 0; 0 -1 0 0; 0 0 1 0; 0 0 0 -1"),
    "Cplus": ("i/2", "0 1 0 0; 1 0 0 0; 0 0 0 1; 0 0 1 0"),
    "Aminus": ("1/2", "0 -i 0 0; i 0 0 0; 0 0 0 i; 0 0 -i 0"),
    "Bminus": ("i/2", "1 0 0 0; 0 -1 0 0; 0 0 -1 0; 0 0 0 1"),
    "Cminus": ("i/2", "0 1 0 0; 1 0 0 0; 0 0 0 -1; 0 0 -1 0"),
    "A0": ("i/2", "0 0 -1 0; 0 0 0 -1; 1 0 0 0; 0 1 0 0"),
    "A3": ("1/2", "0 0 0 -i; 0 0 i 0; 0 -i 0 0; i 0 0 0"),
    "B3": ("i/2", "0 0 1 0; 0 0 0 -1; 1 0 0 0; 0 -1 0 0"),
    "C3": ("i/2", "0 0 0 1; 0 0 1 0; 0 1 0 0; 1 0 0 0"),
}

_Z6 = "0 0 0 0 0 0"

O33 = {
    "L1": ("1", f"{_Z6}; 0 0 -i 0 0 0; 0 i 0 0 0 0; {_Z6}; {_Z6}; {_Z6}"),
    "L2": ("1", f"0 0 i 0 0 0; {_Z6}; -i 0 0 0 0 0; {_Z6}; {_Z6}; {_Z6}"),
    "L3": ("1", f"0 -i 0 0 0 0; i 0 0 0 0 0; {_Z6}; {_Z6}; {_Z6}; {_Z6}"),
    "K1": ("1", f"0 0 0 i 0 0; {_Z6}; {_Z6}; i 0 0 0 0 0; {_Z6}; {_Z6}"),
    "K2": ("1", f"{_Z6}; 0 0 0 i 0 0; {_Z6}; 0 i 0 0 0 0; {_Z6}; {_Z6}"),
    "K3": ("1", f"{_Z6}; {_Z6}; 0 0 0 i 0 0; 0 0 i 0 0 0; {_Z6}; {_Z6}"),
    "Q1": ("1", f"0 0 0 0 i 0; {_Z6}; {_Z6}; {_Z6}; i 0 0 0 0 0; {_Z6}"),
    "Q2": ("1", f"{_Z6}; 0 0 0 0 i 0; {_Z6}; {_Z6}; 0 i 0 0 0 0; {_Z6}"),
    "Q3": ("1", f"{_Z6}; {_Z6}; 0 0 0 0 i 0; {_Z6}; 0 0 i 0 0 0; {_Z6}"),
    "S3": ("1", f"{_Z6}; {_Z6}; {_Z6}; 0 0 0 0 -i 0; 0 0 0 i 0 0; {_Z6}"),
    "S1": ("1", f"{_Z6}; {_Z6}; {_Z6}; {_Z6}; 0 0 0 0 0 -i; 0 0 0 0 i 0"),
    "S2": ("1", f"{_Z6}; {_Z6}; {_Z6}; 0 0 0 0 0 i; {_Z6}; 0 0 0 -i 0 0"),
    "G1": ("1", f"0 0 0 0 0 i; {_Z6}; {_Z6}; {_Z6}; {_Z6}; i 0 0 0 0 0"),
    "G2": ("1", f"{_Z6}; 0 0 0 0 0 i; {_Z6}; {_Z6}; {_Z6}; 0 i 0 0 0 0"),
    "G3": ("1", f"{_Z6}; {_Z6}; 0 0 0 0 0 i; {_Z6}; {_Z6}; 0 0 i 0 0 0"),
}

J_INTERLEAVED = "0 1 0 0; -1 0 0 0; 0 0 0 1; 0 0 -1 0"
J_TRADITIONAL = "0 0 1 0; 0 0 0 1; -1 0 0 0; 0 -1 0 0"


def printed(table: dict, name: str) -> ExactMatrix:
    scale, text = table[name]
    return literal(scale, text)
