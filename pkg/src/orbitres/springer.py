"""Points of the cotangent bundle of a flag manifold in standard position.

Over the standard flag, the cotangent fiber is the nilradical of the
parabolic: block strictly upper triangular matrices.  Sampling them and
reading off Jordan types gives evidence that the Springer map lands on the
closure of the orbit ``dual(sorted(steps))``.

Randomness: every sample ``k`` uses its own ``random.Random`` (Mersenne
Twister) seeded with ``derive_seed(seed, k)``, and draws entries row by row,
left to right, with ``randint(-bound, bound)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactlinalg import ExactMatrix, jordan_type, rank
from .partitions import Partition, PartitionError, dominates, dual
from .polarizations import FlagType


def derive_seed(seed: int, index: int) -> int:
    return (seed << 32) + index


def upper_block_positions(f: FlagType) -> list[tuple[int, int]]:
    """Positions strictly above the diagonal blocks, row-major."""
    block_of = [k for k, rng in enumerate(f.blocks()) for _ in rng]
    n = f.n
    return [(i, j) for i in range(n) for j in range(n) if block_of[j] > block_of[i]]


@dataclass(frozen=True)
class NilradicalSample:
    flag: FlagType
    matrix: ExactMatrix
    seed: int


def sample_nilradical(f: FlagType, seed: int, bound: int = 10) -> NilradicalSample:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = random.Random(seed)
    n = f.n
    rows = [[0] * n for _ in range(n)]
    for i, j in upper_block_positions(f):
        rows[i][j] = rng.randint(-bound, bound)
    return NilradicalSample(f, ExactMatrix(rows), seed)


def generic_jordan_check(f: FlagType, trials: int, seed: int, bound: int = 10) -> dict:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    expected = dual(f.steps.sorted())
    hits = 0
    degenerate = []
    undominated = []
    for k in range(trials):
        sample = sample_nilradical(f, derive_seed(seed, k), bound)
        jt = jordan_type(sample.matrix)
        if jt == expected:
            hits += 1
            continue
        degenerate.append([sample.seed, list(jt.parts)])
        if not dominates(expected, jt):
            undominated.append([sample.seed, list(jt.parts)])
    return {
        "flag": f.to_json(),
        "expected_type": list(expected.parts),
        "seed": seed,
        "bound": bound,
        "trials": trials,
        "hits": hits,
        "degenerate": degenerate,
        "not_dominated": undominated,
    }


def jordan_representative(d: Partition) -> ExactMatrix:
    return ExactMatrix.block_diag([ExactMatrix.jordan_block(p) for p in d.parts])


def sl_basis(n: int) -> list[ExactMatrix]:
    """``E_ij`` for ``i != j`` and ``E_ii - E_nn`` for ``i < n``."""
    basis = []
    for i in range(n):
        for j in range(n):
            if i == j and i == n - 1:
                continue
            rows = [[0] * n for _ in range(n)]
            rows[i][j] = 1
            if i == j:
                rows[n - 1][n - 1] = -1
            basis.append(ExactMatrix(rows))
    return basis


def tangent_dim_oracle(d: Partition, n: int) -> int:
    """Rank of ``X -> X phi - phi X`` on traceless matrices, ``phi`` of Jordan type ``d``."""
    if d.n != n:
        raise PartitionError(f"partition [{d}] is not a partition of {n}")
    if n < 2:
        return 0
    phi = jordan_representative(d)
    images = [(x @ phi - phi @ x).entries() for x in sl_basis(n)]
    return rank(ExactMatrix(images))


def random_block_upper_invertible(f: FlagType, rng: random.Random, bound: int = 3) -> ExactMatrix:
    """A random element of the standard parabolic: unit diagonal plus block
    upper entries, with random nonzero scalars on the diagonal."""
    n = f.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(rng.choice([v for v in range(-bound, bound + 1) if v]))
    block_of = [k for k, r in enumerate(f.blocks()) for _ in r]
    for i in range(n):
        for j in range(i + 1, n):
            if block_of[j] >= block_of[i]:
                rows[i][j] = Fraction(rng.randint(-bound, bound))
    return ExactMatrix(rows)
