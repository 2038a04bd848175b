"""Commutators, exact structure constants and subalgebra searches."""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from functools import cached_property

from . import catalog
from .catalog import GENERATOR_NAMES, ROTATION_NAMES, Ordering
from .errors import NotClosedError
from .exactnum import ExactMatrix, GaussRational, ZERO, format_rational, mat_mul, is_zero

__all__ = [
    "commutator",
    "BasisSet",
    "StructureTable",
    "PairResult",
    "VerificationReport",
    "IsomorphismReport",
    "Subgroup",
    "structure_constants",
    "verify_table",
    "check_isomorphism",
    "closed_subsets",
    "enumerate_sp4_subgroups",
    "fifteen_dim_check",
]


def commutator(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    return mat_mul(x, y) - mat_mul(y, x)


class _Span:
    """Exact coordinates with respect to a list of linearly independent vectors.

    Row-reduces the column matrix ``B`` once, keeping the row operations in
    ``T`` so that ``T @ B`` has the identity in its first ``k`` rows and
    zeros below. Coordinates of ``v`` are then the head of ``T @ v`` and the
    tail must vanish for ``v`` to lie in the span.
    """

    def __init__(self, vectors):
        k = len(vectors)
        m = len(vectors[0])
        rows = [[vectors[c][r] for c in range(k)] for r in range(m)]
        t = [[GaussRational(1) if r == c else ZERO for c in range(m)] for r in range(m)]
        rank = 0
        for col in range(k):
            piv = next((r for r in range(rank, m) if rows[r][col]), None)
            if piv is None:
                raise ValueError(f"vector {col} is linearly dependent on the preceding ones")
            rows[rank], rows[piv] = rows[piv], rows[rank]
            t[rank], t[piv] = t[piv], t[rank]
            inv = 1 / rows[rank][col]
            rows[rank] = [v * inv for v in rows[rank]]
            t[rank] = [v * inv for v in t[rank]]
            for r in range(m):
                if r != rank and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
                    t[r] = [a - f * b for a, b in zip(t[r], t[rank])]
            rank += 1
        self.k = k
        # keep only the nonzero entries of each transform row
        self._t = [[(c, v) for c, v in enumerate(row) if v] for row in t]

    def coordinates(self, vec):
        """Coordinates of ``vec`` or ``None`` when it leaves the span."""
        out = []
        for r, row in enumerate(self._t):
            acc = ZERO
            for c, v in row:
                if vec[c]:
                    acc = acc + v * vec[c]
            if r < self.k:
                out.append(acc)
            elif acc:
                return None
        return out


def rank(mats) -> int:
    """Exact rank of a list of equally sized matrices viewed as vectors."""
    vecs = [list(m.flat()) for m in mats]
    if not vecs:
        return 0
    rows = [list(col) for col in zip(*vecs)]
    r = 0
    for col in range(len(vecs)):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


@dataclass(frozen=True)
class BasisSet:
    labels: tuple
    matrices: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "matrices", tuple(self.matrices))
        if len(self.labels) != len(self.matrices):
            raise ValueError("labels and matrices differ in length")
        if not self.labels:
            raise ValueError("empty basis")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        n = self.matrices[0].n
        if any(m.n != n for m in self.matrices):
            raise ValueError("basis matrices must share one dimension")
        # raises on dependence
        self._span

    @cached_property
    def _span(self) -> _Span:
        return _Span([m.flat() for m in self.matrices])

    @property
    def dim(self) -> int:
        return self.matrices[0].n

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, label) -> ExactMatrix:
        return self.matrices[self.labels.index(label)]

    def expand(self, m: ExactMatrix):
        """Coordinates of ``m`` as ``{label: coeff}`` (zeros dropped) or ``None``."""
        coords = self._span.coordinates(m.flat())
        if coords is None:
            return None
        return {lab: c for lab, c in zip(self.labels, coords) if c}

    def replace(self, label, matrix) -> BasisSet:
        mats = list(self.matrices)
        mats[self.labels.index(label)] = matrix
        return BasisSet(self.labels, mats)

    def subset(self, labels) -> BasisSet:
        return BasisSet(tuple(labels), tuple(self[lab] for lab in labels))

    @classmethod
    def sl4(cls, ordering=Ordering.INTERLEAVED, names=GENERATOR_NAMES, *, printed=False) -> BasisSet:
        ordering = Ordering.parse(ordering)
        if printed:
            mats = []
            for n in names:
                m = catalog.sp4_generator(n, Ordering.INTERLEAVED, printed=True)
                if ordering is Ordering.TRADITIONAL:
                    m = catalog.reorder(m, Ordering.INTERLEAVED, ordering)
                mats.append(m)
            return cls(tuple(names), tuple(mats))
        return cls(tuple(names), tuple(catalog.generator(n, ordering) for n in names))

    @classmethod
    def sp4(cls, ordering=Ordering.INTERLEAVED) -> BasisSet:
        names = [n for n in GENERATOR_NAMES if n in catalog.SP4_MEMBERS]
        return cls(tuple(names), tuple(catalog.sp4_generator(n, ordering) for n in names))

    @classmethod
    def o33(cls, names=GENERATOR_NAMES) -> BasisSet:
        return cls(tuple(names), tuple(catalog.o33_generator(n) for n in names))

    @classmethod
    def secII(cls, names) -> BasisSet:
        return cls(tuple(names), tuple(catalog.secII_generator(n) for n in names))


def _fmt_coeff(c: GaussRational) -> str:
    return str(c)


def format_terms(terms) -> str:
    if not terms:
        return "0"
    return " + ".join(f"({_fmt_coeff(c)}){lab}" for lab, c in terms.items())


@dataclass(frozen=True)
class StructureTable:
    """Brackets ``[X_a, X_b] = sum_k f_ab^k X_k`` keyed by unordered label pairs.

    ``brackets`` maps ``(a, b)`` to ``{k: f}``; lookups in the reverse order
    negate. A table may be partial (printed tables leave some pairs out).
    """

    labels: tuple
    brackets: dict = field(default_factory=dict)

    def lookup(self, a, b):
        """Terms of ``[a, b]``; ``None`` when the table does not specify the pair."""
        if a == b and a in self.labels:
            return {}
        if (a, b) in self.brackets:
            return self.brackets[a, b]
        if (b, a) in self.brackets:
            return {k: -v for k, v in self.brackets[b, a].items()}
        return None

    def pairs(self):
        return list(itertools.combinations(self.labels, 2))

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        if self.labels != other.labels:
            return False
        return all(self.lookup(a, b) == other.lookup(a, b) for a, b in self.pairs())

    def support(self, a, b) -> frozenset:
        return frozenset((self.lookup(a, b) or {}).keys())

    def is_antisymmetric(self) -> bool:
        # storage is one-sided; check the stored reverse entries agree if present
        for (a, b), terms in self.brackets.items():
            if (b, a) in self.brackets and self.brackets[b, a] != {k: -v for k, v in terms.items()}:
                return False
            if a == b and terms:
                return False
        return True

    def jacobi_violations(self):
        """Triples ``(a, b, c)`` where the Jacobi identity fails."""

        def br(x: dict, y: dict) -> dict:
            out = {}
            for a, ca in x.items():
                for b, cb in y.items():
                    if a == b:
                        continue
                    for k, f in (self.lookup(a, b) or {}).items():
                        out[k] = out.get(k, ZERO) + ca * cb * f
            return {k: v for k, v in out.items() if v}

        bad = []
        one = GaussRational(1)
        for a, b, c in itertools.combinations(self.labels, 3):
            total = {}
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                for k, v in br(br({x: one}, {y: one}), {z: one}).items():
                    total[k] = total.get(k, ZERO) + v
            if any(total.values()):
                bad.append((a, b, c))
        return bad

    def to_rows(self):
        rows = []
        for a, b in self.pairs():
            for k, c in (self.lookup(a, b) or {}).items():
                rows.append((a, b, k, format_rational(c.re), format_rational(c.im)))
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "k", "re", "im"])
        w.writerows(self.to_rows())
        return buf.getvalue()

    def to_json(self) -> dict:
        out = []
        for a, b in self.pairs():
            terms = self.lookup(a, b)
            if terms is None:
                continue
            out.append(
                {
                    "i": a,
                    "j": b,
                    "terms": [{"k": k, **c.to_json()} for k, c in terms.items()],
                }
            )
        return {"labels": list(self.labels), "brackets": out}


def structure_constants(basis: BasisSet) -> StructureTable:
    """Expand every pairwise bracket of ``basis`` in the basis itself."""
    table = {}
    for (i, a), (j, b) in itertools.combinations(enumerate(basis.labels), 2):
        br = commutator(basis.matrices[i], basis.matrices[j])
        terms = basis.expand(br)
        if terms is None:
            raise NotClosedError((a, b))
        table[a, b] = terms
    return StructureTable(basis.labels, table)


@dataclass(frozen=True)
class PairResult:
    a: str
    b: str
    status: str  # "match" | "mismatch" | "unspecified"
    computed: dict | None
    expected: dict | None

    def describe(self) -> str:
        lhs = f"[{self.a},{self.b}]"
        comp = "outside span" if self.computed is None else format_terms(self.computed)
        if self.status == "match":
            return f"{lhs} = {comp}"
        if self.status == "unspecified":
            return f"{lhs} = {comp} (not in printed table)"
        return f"{lhs} = {comp}, expected {format_terms(self.expected)}"

    def to_json(self) -> dict:
        def terms(t):
            if t is None:
                return None
            return [{"k": k, **c.to_json()} for k, c in t.items()]

        return {
            "i": self.a,
            "j": self.b,
            "status": self.status,
            "computed": terms(self.computed),
            "expected": terms(self.expected),
        }


@dataclass(frozen=True)
class VerificationReport:
    results: tuple

    @property
    def pairs_checked(self) -> int:
        return len(self.results)

    def with_status(self, status):
        return [r for r in self.results if r.status == status]

    @property
    def mismatches(self):
        return self.with_status("mismatch")

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> dict:
        return {
            "pairs": self.pairs_checked,
            "match": len(self.with_status("match")),
            "mismatch": len(self.mismatches),
            "unspecified": len(self.with_status("unspecified")),
            "pass": self.passed,
        }

    def to_json(self) -> dict:
        return {**self.summary(), "results": [r.to_json() for r in self.results]}

    def to_text(self) -> str:
        lines = [f"{r.status:11s} {r.describe()}" for r in self.results]
        s = self.summary()
        lines.append(
            f"{s['pairs']} pairs: {s['match']} match, {s['mismatch']} mismatch, "
            f"{s['unspecified']} unspecified -> {'PASS' if s['pass'] else 'FAIL'}"
        )
        return "\n".join(lines)


def verify_table(basis: BasisSet, expected: StructureTable, pairs=None) -> VerificationReport:
    """Compare computed brackets of ``basis`` with ``expected`` pair by pair.

    Pairs absent from a partial ``expected`` are reported as unspecified and
    never count as failures. ``pairs`` restricts the check to given pairs.
    """
    if pairs is None:
        pairs = list(itertools.combinations(basis.labels, 2))
    results = []
    for a, b in pairs:
        computed = basis.expand(commutator(basis[a], basis[b]))
        exp = expected.lookup(a, b)
        if exp is None:
            status = "unspecified"
        elif computed is not None and computed == {k: v for k, v in exp.items() if v}:
            status = "match"
        else:
            status = "mismatch"
        results.append(PairResult(a, b, status, computed, exp))
    return VerificationReport(tuple(results))


@dataclass(frozen=True)
class IsomorphismReport:
    isomorphic: bool
    pairs_checked: int
    mismatches: tuple  # (a, b, terms_first, terms_second)

    def __bool__(self):
        return self.isomorphic

    def to_json(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "pairs": self.pairs_checked,
            "mismatch": len(self.mismatches),
            "mismatches": [
                {"i": a, "j": b, "first": format_terms(x), "second": format_terms(y)}
                for a, b, x, y in self.mismatches
            ],
        }


def check_isomorphism(first: BasisSet, second: BasisSet) -> IsomorphismReport:
    """Compare structure constants of two bases under the label-identity map."""
    if first.labels != second.labels:
        raise ValueError("bases must carry identical labels in identical order")
    t1 = structure_constants(first)
    t2 = structure_constants(second)
    bad = []
    for a, b in t1.pairs():
        x, y = t1.lookup(a, b), t2.lookup(a, b)
        if x != y:
            bad.append((a, b, x, y))
    return IsomorphismReport(not bad, len(t1.pairs()), tuple(bad))


def closed_subsets(table: StructureTable, size: int):
    """All label subsets of the given size whose span is bracket-closed."""
    found = []
    for combo in itertools.combinations(table.labels, size):
        members = frozenset(combo)
        if all(table.support(a, b) <= members for a, b in itertools.combinations(combo, 2)):
            found.append(members)
    return found


@dataclass(frozen=True)
class Subgroup:
    pivot: str
    members: frozenset
    kind: str  # "O(3,2)-like" or "O(2,3)-like"

    def ordered(self):
        return [n for n in GENERATOR_NAMES if n in self.members]


def enumerate_sp4_subgroups(basis: BasisSet | None = None):
    """The six ten-element subalgebras built around one extra rotation.

    The O(3,2)-like ones contain ``L1, L2, L3`` and one of ``S1, S2, S3``;
    the O(2,3)-like ones contain ``S1, S2, S3`` and one ``L``. Members come
    from an exhaustive search over every ten-label subset; each result is
    re-verified by recomputing its own structure constants.
    """
    if basis is None:
        basis = BasisSet.sl4()
    table = structure_constants(basis)
    closed = closed_subsets(table, 10)
    rotations = frozenset(ROTATION_NAMES)
    ls, ss = frozenset({"L1", "L2", "L3"}), frozenset({"S1", "S2", "S3"})
    out = []
    for triple, others, kind in ((ls, ("S1", "S2", "S3"), "O(3,2)-like"), (ss, ("L1", "L2", "L3"), "O(2,3)-like")):
        for pivot in others:
            core = triple | {pivot}
            hits = [m for m in closed if core <= m and len(m & rotations) == 4]
            if len(hits) != 1:
                raise RuntimeError(f"expected one closed subset around {pivot}, found {len(hits)}")
            members = hits[0]
            structure_constants(basis.subset([n for n in basis.labels if n in members]))
            out.append(Subgroup(pivot, members, kind))
    return out


def fifteen_dim_check(basis: BasisSet | None = None, mats=None) -> bool:
    """True iff the given matrices are independent and close under brackets."""
    if mats is None:
        if basis is None:
            basis = BasisSet.sl4()
        mats = basis.matrices
    mats = list(mats)
    if rank(mats) != len(mats):
        return False
    try:
        b = BasisSet(tuple(str(k) for k in range(len(mats))), tuple(mats))
        structure_constants(b)
    except NotClosedError:
        return False
    return True


def bracket_is_zero(x: ExactMatrix, y: ExactMatrix) -> bool:
    return is_zero(commutator(x, y))
