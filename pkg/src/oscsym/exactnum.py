"""Exact Gaussian-rational scalars and square matrices.

Rationals are plain :class:`fractions.Fraction` values. :class:`GaussRational`
pairs two of them into an element of Q(i), and :class:`ExactMatrix` is an
immutable square array of those. Nothing here ever rounds.
"""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GaussRational",
    "ExactMatrix",
    "I",
    "ONE",
    "ZERO",
    "as_gauss",
    "parse_rational",
    "format_rational",
    "mat_mul",
    "mat_add",
    "mat_linear",
    "scalar_mul",
    "transpose",
    "is_zero",
    "identity",
    "zeros",
]


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a normalized Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {type(text).__name__}")
    text = text.strip()
    if not text:
        raise ValueError("empty rational string")
    # Fraction() also accepts decimals like "0.5"; only p/q forms are allowed here
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GaussRational:
    """An exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        object.__setattr__(self, "re", parse_rational(re) if isinstance(re, str) else Fraction(re))
        object.__setattr__(self, "im", parse_rational(im) if isinstance(im, str) else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        num = self * other.conjugate()
        return GaussRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    # comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return format_rational(re)
        if im == 1:
            imag = "i"
        elif im == -1:
            imag = "-i"
        else:
            imag = f"{format_rational(im)}i"
        if re == 0:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{format_rational(re)}{sign}{imag}"

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, obj) -> GaussRational:
        if isinstance(obj, dict):
            try:
                return cls(parse_rational(obj["re"]), parse_rational(obj.get("im", "0")))
            except KeyError:
                raise ValueError(f"entry {obj!r} lacks 're'") from None
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            return cls(parse_rational(obj))
        raise ValueError(f"cannot read exact entry from {obj!r}")


def _coerce(x):
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, Rational):
        return GaussRational(Fraction(x))
    return NotImplemented


def as_gauss(x) -> GaussRational:
    """Convert ints, Fractions, ``"p/q"`` strings or exact-valued complex numbers."""
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, str):
        return GaussRational(parse_rational(x))
    if isinstance(x, Rational):
        return GaussRational(Fraction(x))
    if isinstance(x, (complex, float)):
        z = complex(x)
        # only dyadic floats are representable without rounding; reject anything else
        re, im = Fraction(z.real), Fraction(z.imag)
        if re.limit_denominator(1 << 20) != re or im.limit_denominator(1 << 20) != im:
            raise ValueError(f"{x!r} is not an exact small-denominator value")
        return GaussRational(re, im)
    raise TypeError(f"cannot convert {type(x).__name__} to GaussRational")


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


class ExactMatrix:
    """Immutable ``n x n`` matrix of :class:`GaussRational` entries."""

    __slots__ = ("n", "entries", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(as_gauss(v) for v in row) for row in rows)
        n = len(entries)
        if n == 0 or any(len(row) != n for row in entries):
            raise ValueError("ExactMatrix must be square and non-empty")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def _raw(cls, entries: tuple) -> ExactMatrix:
        # trusted constructor: entries already a square tuple of GaussRational
        self = object.__new__(cls)
        object.__setattr__(self, "n", len(entries))
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def from_sparse(cls, n: int, items: dict) -> ExactMatrix:
        """Build from ``{(row, col): value}`` with zero-based indices."""
        rows = [[ZERO] * n for _ in range(n)]
        for (r, c), v in items.items():
            rows[r][c] = as_gauss(v)
        return cls(rows)

    def __getitem__(self, idx):
        r, c = idx
        return self.entries[r][c]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.entries))
        return self._hash

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_add(self, scalar_mul(-1, other))

    def __neg__(self):
        return scalar_mul(-1, self)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __mul__(self, scalar):
        if isinstance(scalar, ExactMatrix):
            return NotImplemented
        return scalar_mul(scalar, self)

    __rmul__ = __mul__

    @property
    def T(self) -> ExactMatrix:
        return transpose(self)

    def trace(self) -> GaussRational:
        total = ZERO
        for k in range(self.n):
            total = total + self.entries[k][k]
        return total

    def is_real(self) -> bool:
        return all(v.im == 0 for row in self.entries for v in row)

    def flat(self) -> tuple:
        return tuple(v for row in self.entries for v in row)

    def to_numpy(self, dtype=complex) -> np.ndarray:
        arr = np.array([[complex(v) for v in row] for row in self.entries])
        if np.dtype(dtype).kind == "f":
            if not self.is_real():
                raise ValueError("matrix has imaginary entries; cannot cast to real")
            return arr.real.astype(dtype)
        return arr.astype(dtype)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[v.to_json() for v in row] for row in self.entries]}

    @classmethod
    def from_json(cls, obj) -> ExactMatrix:
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ValueError("matrix JSON must be an object with 'entries'")
        rows = obj["entries"]
        if not isinstance(rows, list):
            raise ValueError("'entries' must be a list of rows")
        parsed = []
        for r, row in enumerate(rows):
            if not isinstance(row, list):
                raise ValueError(f"row {r} is not a list")
            out = []
            for c, v in enumerate(row):
                try:
                    out.append(GaussRational.from_json(v))
                except (ValueError, ZeroDivisionError, TypeError) as exc:
                    raise ValueError(f"entry [{r}][{c}]: {exc}") from None
            parsed.append(out)
        m = cls(parsed)
        if "n" in obj and obj["n"] != m.n:
            raise ValueError(f"declared n={obj['n']} but entries are {m.n}x{m.n}")
        return m

    def pretty(self) -> str:
        cells = [[str(v) for v in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self):
        return f"ExactMatrix(n={self.n}, {[[str(v) for v in row] for row in self.entries]})"


def _check_dims(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _check_dims(a, b)
    n = a.n
    bcols = list(zip(*b.entries))
    out = []
    for row in a.entries:
        new_row = []
        for col in bcols:
            # skip zero products; generator matrices are mostly zeros
            re = Fraction(0)
            im = Fraction(0)
            for x, y in zip(row, col):
                if x and y:
                    re += x.re * y.re - x.im * y.im
                    im += x.re * y.im + x.im * y.re
            new_row.append(GaussRational(re, im))
        out.append(tuple(new_row))
    return ExactMatrix._raw(tuple(out))


def mat_add(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _check_dims(a, b)
    return ExactMatrix._raw(
        tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries))
    )


def scalar_mul(c, a: ExactMatrix) -> ExactMatrix:
    c = as_gauss(c)
    return ExactMatrix._raw(tuple(tuple(c * x for x in row) for row in a.entries))


def mat_linear(coeffs: Sequence, mats: Sequence[ExactMatrix]) -> ExactMatrix:
    """Exact linear combination ``sum(c_k * M_k)``."""
    if len(coeffs) != len(mats):
        raise ValueError(f"{len(coeffs)} coefficients for {len(mats)} matrices")
    if not mats:
        raise ValueError("empty linear combination has no dimension")
    n = mats[0].n
    for m in mats:
        if m.n != n:
            raise ValueError(f"dimension mismatch: {n} vs {m.n}")
    acc = zeros(n)
    for c, m in zip(coeffs, mats):
        c = as_gauss(c)
        if c:
            acc = acc + scalar_mul(c, m)
    return acc


def transpose(a: ExactMatrix) -> ExactMatrix:
    return ExactMatrix._raw(tuple(tuple(col) for col in zip(*a.entries)))


def is_zero(a: ExactMatrix) -> bool:
    return not any(v for row in a.entries for v in row)


def identity(n: int) -> ExactMatrix:
    return ExactMatrix._raw(tuple(tuple(ONE if r == c else ZERO for c in range(n)) for r in range(n)))


def zeros(n: int) -> ExactMatrix:
    return ExactMatrix._raw(tuple(tuple(ZERO for _ in range(n)) for _ in range(n)))
