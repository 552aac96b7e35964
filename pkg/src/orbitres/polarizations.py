"""Polarizations of nilpotent orbits in sl(n) as flag types.

A flag type is a composition ``(i_1, ..., i_k)`` of ``n``: the dimensions of
the successive quotients ``V_j / V_{j-1}`` of a flag in ``C^n``.  The
polarizations of the orbit with Jordan type ``d`` are the orderings of the
parts of ``dual(d)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import Sequence

from .partitions import Composition, Partition, PartitionError, dual, orderings, reversal_classes


class FlagError(ValueError):
    pass


@dataclass(frozen=True)
class FlagType:
    steps: Composition

    def __init__(self, steps):
        if not isinstance(steps, Composition):
            steps = Composition(steps)
        if not steps.parts:
            raise FlagError("flag type needs at least one step")
        object.__setattr__(self, "steps", steps)

    @property
    def n(self) -> int:
        return self.steps.n

    @property
    def m(self) -> int:
        return len(self.steps)

    def dims(self) -> list[int]:
        """Cumulative dimensions ``i_1, i_1 + i_2, ..., n``."""
        return list(accumulate(self.steps.parts))

    def blocks(self) -> list[range]:
        """Index ranges of the diagonal blocks."""
        starts = [0] + self.dims()
        return [range(starts[k], starts[k + 1]) for k in range(self.m)]

    def reverse(self) -> "FlagType":
        return FlagType(self.steps.reverse())

    def display(self) -> str:
        """Flag-manifold notation listing subspace dimensions downward, e.g.
        steps ``(1,2,3)`` -> ``F(6,3,1)``."""
        return "F(" + ",".join(str(x) for x in reversed(self.dims())) + ")"

    @classmethod
    def from_display(cls, text: str) -> "FlagType":
        body = text.strip()
        if body.startswith("T*"):
            body = body[2:]
        if not (body.startswith("F(") and body.endswith(")")):
            raise FlagError(f"cannot parse flag manifold {text!r}")
        dims = sorted(int(x) for x in body[2:-1].split(","))
        if len(set(dims)) != len(dims) or dims[0] < 1:
            raise FlagError(f"dimensions must be distinct and positive: {text!r}")
        return cls([b - a for a, b in zip([0] + dims, dims)])

    def to_json(self) -> list[int]:
        return list(self.steps.parts)


def enumerate_polarizations(d: Partition, n: int) -> list[FlagType]:
    if d.n != n:
        raise PartitionError(f"partition [{d}] is not a partition of {n}")
    return [FlagType(c) for c in orderings(dual(d))]


def flag_dim(f: FlagType) -> int:
    return (f.n ** 2 - sum(s * s for s in f.steps)) // 2


@dataclass(frozen=True, order=True)
class FibrationFiber:
    """Grassmannian ``Gr(ambient, sub)`` of ``sub``-planes in ``C^ambient``,
    normalized so that ``sub <= ambient / 2``.  ``sub == 1`` is projective space."""

    ambient: int
    sub: int

    def __init__(self, ambient: int, sub: int):
        if not 1 <= sub < ambient:
            raise FlagError(f"need 1 <= sub < ambient, got Gr({ambient},{sub})")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "sub", min(sub, ambient - sub))

    @property
    def is_projective_space(self) -> bool:
        return self.sub == 1

    def __str__(self) -> str:
        if self.is_projective_space:
            return f"P^{self.ambient - 1}"
        return f"Gr({self.ambient},{self.sub})"


def two_step_fibrations(f: FlagType) -> tuple[FibrationFiber, FibrationFiber]:
    """Fibers of the two forgetful maps of a three-step flag manifold.

    For steps ``(a, b, c)`` with ``V_1 ⊂ V_2 ⊂ C^n``: dropping ``V_1`` leaves
    the choice of ``V_1`` inside ``V_2``, i.e. ``Gr(a+b, a)``; dropping ``V_2``
    leaves ``V_2 / V_1`` inside ``C^n / V_1``, i.e. ``Gr(b+c, b)``.
    """
    if f.m != 3:
        raise FlagError(f"expected a flag type with 3 steps, got {f.m}")
    a, b, c = f.steps.parts
    return FibrationFiber(a + b, a), FibrationFiber(b + c, b)


class FibrationVerdict(str, Enum):
    DISTINCT = "Distinct"
    INCONCLUSIVE = "Inconclusive"


def distinguish_by_fibrations(f1: FlagType, f2: FlagType) -> FibrationVerdict:
    # only ever certifies non-isomorphism
    if sorted(two_step_fibrations(f1)) != sorted(two_step_fibrations(f2)):
        return FibrationVerdict.DISTINCT
    return FibrationVerdict.INCONCLUSIVE


def polarization_summary(d: Partition, n: int) -> dict:
    """Everything the ``polarizations`` command reports for one orbit."""
    flags = enumerate_polarizations(d, n)
    classes = reversal_classes([f.steps for f in flags])
    out = {
        "partition": list(d.parts),
        "n": n,
        "dual": list(dual(d).parts),
        "polarizations": [
            {"steps": f.to_json(), "display": "T*" + f.display(), "flag_dim": flag_dim(f)}
            for f in flags
        ],
        "reversal_classes": [
            ["T*" + FlagType(c).display() for c in cls] for cls in classes
        ],
        "polarization_count": len(flags),
        "reversal_class_count": len(classes),
    }
    if flags and flags[0].m == 3:
        reps = representatives(flags)
        out["fibrations"] = [
            {"flag": "T*" + f.display(), "fibers": [str(x) for x in two_step_fibrations(f)]}
            for f in flags
        ]
        out["class_comparisons"] = [
            {"a": "T*" + f1.display(), "b": "T*" + f2.display(),
             "verdict": distinguish_by_fibrations(f1, f2).value}
            for i, f1 in enumerate(reps) for f2 in reps[i + 1:]
        ]
    return out


def representatives(flags: Sequence[FlagType]) -> list[FlagType]:
    return [FlagType(cls[0]) for cls in reversal_classes([f.steps for f in flags])]
