"""Matrix corpus with known torsion expectations, shared across test modules.

Torsion entries are built so that (preperiod, period) is known by
construction: a block-diagonal of the k-by-k shift block (minimal polynomial
z**k) and companion blocks of distinct cyclotomics gamma_j has minimal
polynomial z**k times their product, hence preperiod k and period lcm(J).
Permutation matrices with cycle type lambda have period lcm(lambda) and no
preperiod. Similarity conjugates inherit everything from their base matrix.

Non-torsion entries: the unipotent [[1,1],[0,1]] family (minimal polynomial
(z-1)**2, not squarefree), growing scalars, companions of non-cyclotomic
polynomials, and random integer matrices filtered to |det| >= 2, which
forces an eigenvalue outside the unit circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from random import Random

from torsionkit.matrices import RatMatrix, block_diag, companion_matrix, mat_mul
from torsionkit.numbertheory import cyclotomic, totient
from torsionkit.polynomials import RatPoly

from _oracles import (
    conjugate,
    determinant,
    rational_diagonal_pair,
    unimodular_pair,
)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    matrix: RatMatrix
    torsion: bool
    preperiod: int | None = None
    period: int | None = None


def torsion_block_matrix(k: int, indices: tuple[int, ...]) -> RatMatrix:
    """blockdiag(shift_k, companion(gamma_j) for j in indices), k >= 0."""
    blocks = []
    if k:
        blocks.append(companion_matrix(RatPoly([0] * k + [1])))
    for j in sorted(indices):
        blocks.append(companion_matrix(cyclotomic(j).to_rational()))
    return block_diag(*blocks)


def permutation_matrix(cycle_type: tuple[int, ...]) -> RatMatrix:
    # The c-cycle permutation matrix is the companion matrix of z**c - 1.
    return block_diag(
        *(companion_matrix(RatPoly([-1] + [0] * (c - 1) + [1])) for c in cycle_type)
    )


def _partitions(n: int, cap: int | None = None) -> list[tuple[int, ...]]:
    cap = n if cap is None else cap
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, cap), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return out


def _companion_combos(limit: int) -> list[tuple[int, tuple[int, ...]]]:
    """Every (k, J) with k + sum of totients <= limit, except the empty one."""
    candidates = [j for j in range(1, 2 * limit * limit + 1) if totient(j) <= limit]
    subsets: list[tuple[int, tuple[int, ...]]] = [(0, ())]
    for j in candidates:
        cost = totient(j)
        subsets.extend(
            (used + cost, chosen + (j,))
            for used, chosen in list(subsets)
            if used + cost <= limit
        )
    combos = []
    for used, chosen in subsets:
        for k in range(0, limit - used + 1):
            if k + used >= 1:
                combos.append((k, chosen))
    return combos


def _random_int_matrix(rng: Random, d: int) -> RatMatrix:
    """Random integer matrix with |det| >= 2, so some eigenvalue exceeds 1."""
    while True:
        m = RatMatrix([[rng.randint(-4, 4) for _ in range(d)] for _ in range(d)])
        if abs(determinant(m)) >= 2:
            return m


def _conjugator(rng: Random, d: int, fancy: bool) -> tuple[RatMatrix, RatMatrix]:
    fwd, back = unimodular_pair(rng, d)
    if fancy and d > 1:
        df, db = rational_diagonal_pair(rng, d)
        fwd, back = mat_mul(df, fwd), mat_mul(back, db)
    return fwd, back


@lru_cache(maxsize=1)
def get_corpus() -> tuple[CorpusEntry, ...]:
    rng = Random(20260816)
    entries: list[CorpusEntry] = []

    # Block-companion constructions: every shape that fits in order 4,
    # plus a handful of order 5 and 6 shapes.
    combos = _companion_combos(4)
    combos += [
        (1, (5,)),
        (0, (1, 12)),
        (0, (2, 8)),
        (1, (3, 4)),
        (1, (1, 2, 6)),
        (0, (7,)),
        (0, (9,)),
        (0, (5, 6)),
    ]
    for k, indices in combos:
        period = lcm(*indices) if indices else 1
        entries.append(
            CorpusEntry(
                name=f"companion k={k} J={sorted(indices)}",
                matrix=torsion_block_matrix(k, indices),
                torsion=True,
                preperiod=k,
                period=period,
            )
        )

    # Permutation matrices: all cycle types up to order 5, two of order 6.
    cycle_types = [ct for d in range(2, 6) for ct in _partitions(d)]
    cycle_types += [(6,), (3, 2, 1)]
    for ct in cycle_types:
        entries.append(
            CorpusEntry(
                name=f"permutation cycles={list(ct)}",
                matrix=permutation_matrix(ct),
                torsion=True,
                preperiod=0,
                period=lcm(*ct),
            )
        )

    # One similarity conjugate per torsion base of order <= 5.
    torsion_bases = list(entries)
    for i, base in enumerate(torsion_bases):
        d = base.matrix.order
        if d > 5:
            continue
        fwd, back = _conjugator(rng, d, fancy=i % 2 == 0)
        entries.append(
            CorpusEntry(
                name=f"conjugate of [{base.name}]",
                matrix=conjugate(base.matrix, fwd, back),
                torsion=True,
                preperiod=base.preperiod,
                period=base.period,
            )
        )

    # Non-torsion: unipotent blocks (minimal polynomial (z-1)**2 or higher).
    non_torsion: list[CorpusEntry] = []
    for size in range(2, 6):
        jordan = RatMatrix(
            [[1 if i == j or j == i + 1 else 0 for j in range(size)] for i in range(size)]
        )
        non_torsion.append(CorpusEntry(f"unipotent jordan {size}", jordan, False))
    for c in (2, Fraction(1, 2), -3):
        non_torsion.append(
            CorpusEntry(f"unipotent scaled c={c}", RatMatrix([[1, c], [0, 1]]), False)
        )

    # Non-torsion: scalars off the unit circle.
    for value in (2, Fraction(1, 2), -2, Fraction(3, 2)):
        non_torsion.append(CorpusEntry(f"scalar {value}", RatMatrix([[value]]), False))

    # Non-torsion: companions whose polynomials are not cyclotomic products:
    # an irrational rotation, a squared factor, and three growing spectra.
    for label, coeffs in (
        ("irrational rotation", [1, Fraction(-3, 2), 1]),
        ("squared factor", [1, 2, 1]),
        ("plastic", [-1, -1, 0, 1]),
        ("golden", [-1, -1, 1]),
        ("det 2 quartic", [2, 1, 1, 1, 1]),
    ):
        non_torsion.append(
            CorpusEntry(
                f"companion {label}",
                companion_matrix(RatPoly(coeffs)),
                False,
            )
        )

    # Non-torsion: random integer matrices with |det| >= 2.
    for d, count in ((2, 10), (3, 10), (4, 10), (5, 5)):
        for i in range(count):
            non_torsion.append(
                CorpusEntry(
                    f"random det>=2 order {d} #{i}",
                    _random_int_matrix(rng, d),
                    False,
                )
            )

    # Conjugates of every other small non-torsion base.
    for i, base in enumerate(non_torsion):
        d = base.matrix.order
        if d > 4 or i % 2:
            continue
        fwd, back = _conjugator(rng, d, fancy=i % 4 == 0)
        entries.append(
            CorpusEntry(
                name=f"conjugate of [{base.name}]",
                matrix=conjugate(base.matrix, fwd, back),
                torsion=False,
            )
        )
    entries.extend(non_torsion)

    return tuple(entries)


def torsion_entries() -> list[CorpusEntry]:
    return [e for e in get_corpus() if e.torsion]


def non_torsion_entries() -> list[CorpusEntry]:
    return [e for e in get_corpus() if not e.torsion]
