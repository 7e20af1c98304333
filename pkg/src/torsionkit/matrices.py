"""Exact square-matrix arithmetic over the rationals.

Everything here is immutable and pure: multiplication, binary powering
(exponents may be huge integers, e.g. factorials), Horner evaluation of a
polynomial at a matrix, and minimal polynomial extraction by exact Gaussian
elimination. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InternalConsistencyError
from .polynomials import RatPoly

EntryLike = Union[int, Fraction]


@dataclass(frozen=True, slots=True)
class RatMatrix:
    """Immutable square matrix of exact rationals.

    >>> RatMatrix([[0, -1], [1, 0]]).order
    2
    >>> RatMatrix([[0, -1], [1, 0]]) * RatMatrix([[0, -1], [1, 0]])
    RatMatrix([[-1, 0], [0, -1]])
    """

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Sequence[EntryLike]]) -> None:
        if isinstance(rows, RatMatrix):
            object.__setattr__(self, "rows", rows.rows)
            return
        grid = tuple(
            tuple(e if isinstance(e, Fraction) else Fraction(e) for e in row)
            for row in rows
        )
        d = len(grid)
        if d == 0:
            raise ValueError("matrix order must be at least 1")
        for i, row in enumerate(grid):
            if len(row) != d:
                raise ValueError(
                    f"matrix must be square: {d} rows but row {i} has {len(row)} entries"
                )
        object.__setattr__(self, "rows", grid)

    @property
    def order(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, d: int) -> RatMatrix:
        if d < 1:
            raise ValueError("matrix order must be at least 1")
        return cls([[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def zeros(cls, d: int) -> RatMatrix:
        if d < 1:
            raise ValueError("matrix order must be at least 1")
        return cls([[0] * d for _ in range(d)])

    @classmethod
    def scalar(cls, d: int, value: EntryLike) -> RatMatrix:
        """value times the identity."""
        if d < 1:
            raise ValueError("matrix order must be at least 1")
        return cls([[value if i == j else 0 for j in range(d)] for i in range(d)])

    def __getitem__(self, pos: tuple[int, int]) -> Fraction:
        i, j = pos
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(not e for row in self.rows for e in row)

    def is_identity(self) -> bool:
        return all(
            e == (1 if i == j else 0)
            for i, row in enumerate(self.rows)
            for j, e in enumerate(row)
        )

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return RatMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return RatMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __mul__(self, other: RatMatrix) -> RatMatrix:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __pow__(self, e: int) -> RatMatrix:
        return mat_pow(self, e)

    def scaled(self, factor: EntryLike) -> RatMatrix:
        f = Fraction(factor)
        return RatMatrix([[f * e for e in row] for row in self.rows])

    def flatten(self) -> tuple[Fraction, ...]:
        """Entries in row-major order, for linear-algebra over the d*d space."""
        return tuple(e for row in self.rows for e in row)

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def __repr__(self) -> str:
        rows = ", ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.rows
        )
        return f"RatMatrix([{rows}])"

    def to_data(self) -> list[list[int | str]]:
        """JSON form: array of rows, entries exact ints or "p/q" strings."""
        return [
            [int(e) if e.denominator == 1 else f"{e.numerator}/{e.denominator}" for e in row]
            for row in self.rows
        ]

    @classmethod
    def from_data(cls, data: Iterable[Sequence[int | str]]) -> RatMatrix:
        rows = []
        for row in data:
            out = []
            for item in row:
                if isinstance(item, bool) or isinstance(item, float):
                    raise ValueError(f"non-exact matrix entry: {item!r}")
                out.append(Fraction(item))
            rows.append(out)
        return cls(rows)


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Exact matrix product; orders must match."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    d = a.order
    bcols = tuple(tuple(b.rows[k][j] for k in range(d)) for j in range(d))
    return RatMatrix(
        [
            [sum(x * y for x, y in zip(row, col)) for col in bcols]
            for row in a.rows
        ]
    )


def mat_pow(m: RatMatrix, e: int) -> RatMatrix:
    """M**e by binary powering; e may be an arbitrarily large non-negative int.

    >>> mat_pow(RatMatrix([[0, -1], [1, 0]]), 4).is_identity()
    True
    """
    if e < 0:
        raise ValueError("matrix powers require a non-negative exponent")
    result = RatMatrix.identity(m.order)
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base)
        if e > 1:
            base = mat_mul(base, base)
        e >>= 1
    return result


def horner_matrix_eval(p: RatPoly, m: RatMatrix) -> RatMatrix:
    """p(M) by Horner's scheme: deg(p) products and scalar additions.

    >>> horner_matrix_eval(RatPoly([-1, 0, 1]), RatMatrix([[0, -1], [1, 0]]))
    RatMatrix([[-2, 0], [0, -2]])
    """
    d = m.order
    acc = RatMatrix.zeros(d)
    for c in reversed(p.coeffs):
        acc = mat_mul(acc, m)
        if c:
            acc = acc + RatMatrix.scalar(d, c)
    return acc


def minimal_polynomial(m: RatMatrix) -> RatPoly:
    """The monic generator of all polynomials that vanish at M.

    Flattens I, M, M^2, ... into vectors of length d*d and looks for the
    first linear dependence by incremental exact Gaussian elimination. The
    reduction of each new power tracks the combination of powers it came
    from, so the dependence coefficients fall out directly, already monic.
    A dependence must appear by degree d; not finding one means the
    arithmetic is broken and raises loudly.

    >>> minimal_polynomial(RatMatrix([[1, 0], [0, 2]]))
    RatPoly('z^2 - 3*z + 2')
    """
    d = m.order
    size = d * d
    # Echelon rows found so far: (pivot position, reduced vector, combo)
    # where combo holds coefficients over the powers contributed so far.
    basis: list[tuple[int, list[Fraction], list[Fraction]]] = []
    power = RatMatrix.identity(d)
    for k in range(d + 1):
        vec = list(power.flatten())
        combo = [Fraction(0)] * (k + 1)
        combo[k] = Fraction(1)
        for pivot, bvec, bcombo in basis:
            factor = vec[pivot]
            if factor:
                for i in range(size):
                    vec[i] -= factor * bvec[i]
                for i, c in enumerate(bcombo):
                    combo[i] -= factor * c
        lead = next((i for i, x in enumerate(vec) if x), None)
        if lead is None:
            return RatPoly(combo)
        inv = 1 / vec[lead]
        vec = [x * inv for x in vec]
        combo = [c * inv for c in combo]
        basis.append((lead, vec, combo))
        if k < d:
            power = mat_mul(power, m)
    raise InternalConsistencyError(
        f"no polynomial of degree <= {d} annihilates this {d}x{d} matrix"
    )


def max_bit_length(m: RatMatrix) -> int:
    """Largest bit length over all entry numerators and denominators.

    A size guardrail for benchmarks: exact arithmetic never truncates, so
    this is how entry growth is observed.
    """
    return max(
        max(abs(e.numerator).bit_length(), e.denominator.bit_length())
        for row in m.rows
        for e in row
    )


def companion_matrix(p: RatPoly) -> RatMatrix:
    """Companion matrix of a monic polynomial of degree >= 1.

    Column d-1 carries the negated low coefficients; the subdiagonal is ones.
    Its minimal polynomial is p itself, which makes companions of cyclotomic
    polynomials the canonical generators of pure rotation blocks.

    >>> companion_matrix(RatPoly([1, -1, 1]))
    RatMatrix([[0, -1], [1, 1]])
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("companion matrix needs degree at least 1")
    if p.lead() != 1:
        raise ValueError("companion matrix is defined for monic polynomials")
    d = int(p.degree)
    return RatMatrix(
        [
            [
                -p.coeffs[i] if j == d - 1 else (1 if i == j + 1 else 0)
                for j in range(d)
            ]
            for i in range(d)
        ]
    )


def block_diag(*blocks: RatMatrix) -> RatMatrix:
    """Direct sum of square blocks along the diagonal."""
    if not blocks:
        raise ValueError("block_diag needs at least one block")
    total = sum(b.order for b in blocks)
    rows = [[Fraction(0)] * total for _ in range(total)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b.rows):
            rows[offset + i][offset:offset + b.order] = row
        offset += b.order
    return RatMatrix(rows)
