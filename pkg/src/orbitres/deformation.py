"""Fibers of the deformation bundle over the standard flag.

For a flag type ``f`` whose steps are an ordering of the dual partition
``s = (s_1, ..., s_m)``, a fiber element is a traceless block upper
triangular matrix whose diagonal blocks are scalars ``a_i * I_{s_i}``.  The
cotangent fiber is the part with every ``a_i = 0``.

Two routes reach the same point of ``C^{n-1}``:

* ``ch``: characteristic polynomial coefficients of the whole matrix,
  computed by :func:`~orbitres.exactlinalg.char_poly`;
* ``pi_map(eta(...))``: the first ``m - 1`` scalars, completed by the trace
  condition, expanded as ``prod (x - a_i)^{s_i}``.

Both are exact, so agreement is checked with ``==``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlinalg import ExactMatrix, char_poly, is_nilpotent, is_semisimple_with_spectrum, poly_from_roots
from .partitions import Partition
from .polarizations import FlagType, flag_dim
from .springer import derive_seed, upper_block_positions


class DeformationError(ValueError):
    pass


@dataclass(frozen=True)
class AVector:
    s: Partition
    a: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.a) != len(self.s):
            raise DeformationError(f"need {len(self.s)} scalars, got {len(self.a)}")
        if sum(si * ai for si, ai in zip(self.s, self.a)) != 0:
            raise DeformationError("scalars violate the trace condition sum s_i a_i = 0")

    def spectrum(self) -> list[tuple[Fraction, int]]:
        """``(eigenvalue, multiplicity)`` pairs with equal eigenvalues merged."""
        merged: dict[Fraction, int] = {}
        for si, ai in zip(self.s, self.a):
            merged[ai] = merged.get(ai, 0) + si
        return list(merged.items())


def complete_a(s: Partition, head: Sequence) -> AVector:
    if len(head) != len(s) - 1:
        raise DeformationError(f"head must have {len(s) - 1} entries, got {len(head)}")
    head = [Fraction(x) for x in head]
    last = -sum((si * ai for si, ai in zip(s, head)), Fraction(0)) / s[-1]
    return AVector(s, tuple(head) + (last,))


def block_assignment(f: FlagType, s: Partition) -> list[int]:
    """For each block of ``f``, the index into ``s`` of the part it carries.

    Equal parts are matched in increasing index order.
    """
    if f.steps.sorted() != s:
        raise DeformationError(f"flag steps {f.steps} are not an ordering of [{s}]")
    free: dict[int, list[int]] = {}
    for i, p in enumerate(s):
        free.setdefault(p, []).append(i)
    return [free[step].pop(0) for step in f.steps]


@dataclass(frozen=True)
class ESection:
    flag: FlagType
    matrix: ExactMatrix
    avec: AVector

    def __post_init__(self):
        m, f = self.matrix, self.flag
        if (m.rows, m.cols) != (f.n, f.n):
            raise DeformationError("matrix size does not match the flag")
        blocks = f.blocks()
        assign = block_assignment(f, self.avec.s)
        block_of = [k for k, r in enumerate(blocks) for _ in r]
        for i in range(f.n):
            for j in range(f.n):
                bi, bj = block_of[i], block_of[j]
                if bj < bi or (bi == bj and i != j):
                    if m[i, j] != 0:
                        raise DeformationError(f"entry ({i},{j}) must vanish")
                elif i == j and m[i, i] != self.avec.a[assign[bi]]:
                    raise DeformationError(f"diagonal entry {i} does not match its block scalar")


def build_section(f: FlagType, avec: AVector, upper: Sequence) -> ESection:
    """Assemble a section from block scalars and the strictly-upper-block
    entries (in :func:`upper_block_positions` order)."""
    positions = upper_block_positions(f)
    if len(upper) != len(positions):
        raise DeformationError(f"need {len(positions)} upper entries, got {len(upper)}")
    n = f.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    assign = block_assignment(f, avec.s)
    for k, rng in enumerate(f.blocks()):
        for i in rng:
            rows[i][i] = avec.a[assign[k]]
    for (i, j), v in zip(positions, upper):
        rows[i][j] = Fraction(v)
    return ESection(f, ExactMatrix(rows), avec)


def eta(e: ESection) -> tuple[Fraction, ...]:
    return e.avec.a[:-1]


def pi_map(s: Partition, head: Sequence) -> tuple[Fraction, ...]:
    avec = complete_a(s, head)
    return poly_from_roots(list(zip(avec.a, s)))[1:]


def ch(m: ExactMatrix) -> tuple[Fraction, ...]:
    if m.trace() != 0:
        raise DeformationError("ch needs a traceless matrix")
    return char_poly(m)[1:]


def _random_fraction(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_section(f: FlagType, s: Partition, rng: random.Random, bound: int,
                   head: Sequence | None = None) -> ESection:
    """Integer upper entries in ``[-bound, bound]``; if no head is given, a
    random head with numerators in ``[-bound, bound]`` and denominators in
    ``1..bound``.  The head is drawn first."""
    if head is None:
        head = [_random_fraction(rng, bound) for _ in range(len(s) - 1)]
    upper = [rng.randint(-bound, bound) for _ in upper_block_positions(f)]
    return build_section(f, complete_a(s, head), upper)


def verify_commuting_square(f: FlagType, samples: int, seed: int, bound: int = 10) -> dict:
    s = f.steps.sorted()
    failures = []
    for k in range(samples):
        rng = random.Random(derive_seed(seed, k))
        e = random_section(f, s, rng, bound)
        lhs, rhs = ch(e.matrix), pi_map(s, eta(e))
        if lhs != rhs:
            failures.append({
                "sample": k,
                "matrix": e.matrix.format(),
                "ch": [str(x) for x in lhs],
                "pi_eta": [str(x) for x in rhs],
            })
    return {
        "flag": f.to_json(),
        "s": list(s.parts),
        "seed": seed,
        "bound": bound,
        "samples": samples,
        "failures": len(failures),
        "counterexamples": failures,
    }


def fiber_dimension_check(f: FlagType, seed: int = 0, bound: int = 10) -> dict:
    s = f.steps.sorted()
    upper = len(upper_block_positions(f))
    total = upper + len(s) - 1
    rng = random.Random(seed)
    head = tuple(_random_fraction(rng, bound) for _ in range(len(s) - 1))
    e = random_section(f, s, rng, bound, head=head)
    return {
        "flag": f.to_json(),
        "upper_entries": upper,
        "total_parameters": total,
        "expected_upper_entries": flag_dim(f),
        "expected_total_parameters": flag_dim(f) + len(s) - 1,
        "eta_preimage_ok": eta(e) == head,
        "ok": upper == flag_dim(f) and eta(e) == head,
    }


def generic_fiber_check(f: FlagType, head: Sequence, samples: int, seed: int, bound: int = 10) -> dict:
    s = f.steps.sorted()
    avec = complete_a(s, head)
    if len(set(avec.a)) != len(avec.a):
        raise DeformationError(f"not generic: completed scalars {[str(x) for x in avec.a]} repeat")
    spectrum = avec.spectrum()
    bad = []
    for k in range(samples):
        rng = random.Random(derive_seed(seed, k))
        e = random_section(f, s, rng, bound, head=avec.a[:-1])
        if not is_semisimple_with_spectrum(e.matrix, spectrum):
            bad.append({"sample": k, "matrix": e.matrix.format()})
    return {
        "flag": f.to_json(),
        "head": [str(x) for x in avec.a[:-1]],
        "spectrum": [[str(v), k] for v, k in spectrum],
        "seed": seed,
        "samples": samples,
        "semisimple": samples - len(bad),
        "failures": bad,
    }


def zero_fiber_is_nilpotent(f: FlagType, samples: int, seed: int, bound: int = 10) -> bool:
    s = f.steps.sorted()
    zero = [0] * (len(s) - 1)
    for k in range(samples):
        e = random_section(f, s, random.Random(derive_seed(seed, k)), bound, head=zero)
        if not is_nilpotent(e.matrix):
            return False
    return True
