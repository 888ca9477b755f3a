"""Binomial transform pair, the signed-binomial conjugation matrix, and
primorial divisibility of transforms.

The transform sends a sequence (a_n) to b_n = sum_k (-1)^(n-k) C(n,k) a_k;
its inverse is a_n = sum_k C(n,k) b_k.  All arithmetic is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Exact, ExactSequence, InputError
from .primes import sieve_flags


def binomial_rows(n_max: int) -> list[list[int]]:
    """Pascal-triangle rows 0..n_max, computed by the exact additive recurrence."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of exact numbers, row-major storage."""

    rows: int
    cols: int
    entries: tuple[Exact, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InputError("matrix dimensions must be positive")
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if isinstance(e, bool) or not isinstance(e, (int, Fraction)):
                raise InputError("matrix entries must be exact numbers")

    @classmethod
    def from_rows(cls, rows: list[list[Exact]]) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if rows else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise InputError("ragged rows")
            flat.extend(row)
        return cls(r, c, tuple(flat))

    def at(self, i: int, j: int) -> Exact:
        """Entry at 0-based (i, j)."""
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Exact]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def transpose(self) -> "ExactMatrix":
        flat = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return ExactMatrix(self.cols, self.rows, flat)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise InputError("dimension mismatch in matrix product")
        a = self.to_rows()
        b = other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            row = []
            for j in range(other.cols):
                acc: Exact = 0
                for k in range(self.cols):
                    acc += ai[k] * b[k][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix.from_rows(out)

    def to_json_obj(self) -> dict:
        """JSON-ready form: row-major decimal strings."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [str(e) for e in self.entries],
        }


@dataclass(frozen=True)
class PrimorialTable:
    """values[n] is the product of all primes <= n (1 for n < 2)."""

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]


def primorials(n_max: int) -> PrimorialTable:
    """Exact primorial table for 0..n_max."""
    if n_max < 0:
        raise InputError("n_max must be >= 0")
    flags = sieve_flags(n_max)
    values = []
    acc = 1
    for n in range(n_max + 1):
        if flags[n]:
            acc *= n
        values.append(acc)
    return PrimorialTable(tuple(values))


def _alternating_weighted_sums(values: list[Exact]) -> list[Exact]:
    rows = binomial_rows(len(values) - 1) if values else []
    out: list[Exact] = []
    for n in range(len(values)):
        row = rows[n]
        acc: Exact = 0
        for k in range(n + 1):
            term = row[k] * values[k]
            acc = acc + term if (n - k) % 2 == 0 else acc - term
        out.append(acc)
    return out


def binomial_transform(seq: ExactSequence) -> ExactSequence:
    """b_n = sum_{k=0}^{n} (-1)^(n-k) C(n,k) a_k, computed exactly."""
    return ExactSequence.of(_alternating_weighted_sums(list(seq.terms)))


def inverse_binomial_transform(seq: ExactSequence) -> ExactSequence:
    """a_n = sum_{k=0}^{n} C(n,k) b_k; exact inverse of the forward transform."""
    values = list(seq.terms)
    rows = binomial_rows(len(values) - 1)
    out = []
    for n in range(len(values)):
        row = rows[n]
        acc: Exact = 0
        for k in range(n + 1):
            acc += row[k] * values[k]
        out.append(acc)
    return ExactSequence.of(out)


def lower_triangular_rows(n: int) -> list[list[int]]:
    """Rows of the n x n signed-binomial lower-triangular matrix.

    With 1-based indices the (i, j) entry is (-1)^(i-j) C(i-1, j-1) for
    j <= i and 0 above the diagonal.  Conjugating a Hankel matrix by this
    matrix realizes the binomial transform on its entries.
    """
    if n < 1:
        raise InputError("order must be >= 1")
    pascal = binomial_rows(n - 1)
    rows = []
    for i in range(n):
        row = [0] * n
        for j in range(i + 1):
            c = pascal[i][j]
            row[j] = c if (i - j) % 2 == 0 else -c
        rows.append(row)
    return rows


def lower_triangular_L(n: int) -> ExactMatrix:
    """The signed-binomial conjugation matrix as an ExactMatrix (det = 1)."""
    return ExactMatrix.from_rows(lower_triangular_rows(n))


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of the primorial-divisibility check on a transform."""

    passed: bool
    checked: int
    failures: tuple[tuple[int, int, int], ...]  # (n, primorial, residue)


def check_primorial_divisibility(seq: ExactSequence) -> DivisibilityReport:
    """Check that the n-th primorial divides the n-th transform coefficient.

    Residues are reported as least nonnegative.  Holds for every sequence
    whose prefix passes the primary congruence check.
    """
    if not seq.is_integer:
        raise InputError("primorial divisibility is defined for integer sequences")
    b = binomial_transform(seq).integer_terms()
    table = primorials(len(b) - 1)
    failures = []
    for n, bn in enumerate(b):
        r = bn % table[n]
        if r != 0:
            failures.append((n, table[n], r))
    return DivisibilityReport(not failures, len(b), tuple(failures))
