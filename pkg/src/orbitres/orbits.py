"""Nilpotent orbits of the classical Lie algebras and uniqueness criteria for
their symplectic resolutions.

An orbit is named by its family (A, B, C, D), the size ``n`` of the defining
representation and the Jordan partition of ``n``.  Only type A gets a
dimension formula; for B, C and D the module checks validity and the
partition-shape criteria.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .partitions import Partition, PartitionError, dual, orderings, parse_parts, reversal_classes


class OrbitError(ValueError):
    pass


FAMILY_NAMES = {"A": "sl", "B": "so", "C": "sp", "D": "so"}


@dataclass(frozen=True)
class OrbitDescriptor:
    family: str
    size: int
    partition: Partition

    def __post_init__(self):
        validate(self.family, self.size, self.partition)

    @classmethod
    def parse(cls, text: str) -> "OrbitDescriptor":
        return parse_descriptor(text)

    def __str__(self) -> str:
        return f"{FAMILY_NAMES[self.family]}({self.size}):[{self.partition}]"


def validate(family: str, size: int, d: Partition) -> None:
    if family not in FAMILY_NAMES:
        raise OrbitError(f"unknown family {family!r}")
    if d.n != size:
        raise OrbitError(f"partition [{d}] has sum {d.n}, expected {size}")
    mult = d.multiplicities()
    if family in "BD":
        if family == "B" and size % 2 == 0:
            raise OrbitError(f"type B needs odd size, got {size}")
        if family == "D" and size % 2 == 1:
            raise OrbitError(f"type D needs even size, got {size}")
        bad = sorted(p for p, k in mult.items() if p % 2 == 0 and k % 2 == 1)
        if bad:
            raise OrbitError(f"even parts {bad} must have even multiplicity in type {family}")
    elif family == "C":
        bad = sorted(p for p, k in mult.items() if p % 2 == 1 and k % 2 == 1)
        if bad:
            raise OrbitError(f"odd parts {bad} must have even multiplicity in type C")


_DESCRIPTOR = re.compile(r"^\s*(sl|so|sp)\s*\(\s*(\d+)\s*\)\s*:\s*(.*)$", re.IGNORECASE)


def parse_descriptor(text: str) -> OrbitDescriptor:
    """Parse ``sl(6):[3,2,1]``, ``so(8):[3,1^5]`` or ``sp(4):[2,2]``.

    ``so(n)`` is type B for odd ``n`` and type D for even ``n``.
    """
    m = _DESCRIPTOR.match(text)
    if m is None:
        raise OrbitError(f"cannot parse descriptor {text!r} at position 0: expected sl(n), so(n) or sp(n)")
    algebra, size = m.group(1).lower(), int(m.group(2))
    family = {"sl": "A", "sp": "C"}.get(algebra) or ("B" if size % 2 else "D")
    try:
        parts = parse_parts(m.group(3))
    except PartitionError as exc:
        raise OrbitError(f"at position {m.start(3)}: {exc}") from exc
    return OrbitDescriptor(family, size, Partition.from_unsorted(parts))


def orbit_dim_A(d: Partition) -> int:
    s = dual(d)
    return d.n ** 2 - sum(p * p for p in s)


# Orbits whose boundary is a single codimension-two orbit with an A1
# singularity, as listed by hand.  Membership is certification, absence is not
# a disproof.
A1_DEGENERATION_LIST = frozenset({
    ("B", 5, (3, 1, 1)),
    ("C", 4, (2, 2)),
    ("D", 8, (3, 3, 1, 1)),
    ("D", 8, (3, 1, 1, 1, 1, 1)),
    ("D", 8, (2, 2, 2, 2)),
})


def check_prop_A1_list(o: OrbitDescriptor) -> bool:
    return (o.family, o.size, o.partition.parts) in A1_DEGENERATION_LIST


def check_rectangular(o: OrbitDescriptor) -> bool:
    if o.family != "A":
        raise OrbitError("wrong family: rectangular criterion applies to type A")
    return len(set(o.partition.parts)) <= 1


def check_BCD_condition(o: OrbitDescriptor) -> bool:
    """All parts equal to one even number, or some parts ``2k+1`` followed
    only by parts ``2k`` (``k >= 1``)."""
    if o.family == "A":
        raise OrbitError("wrong family: criterion applies to types B, C, D")
    values = sorted(set(o.partition.parts), reverse=True)
    if len(values) == 1:
        return values[0] % 2 == 0 and values[0] >= 2
    if len(values) == 2:
        hi, lo = values
        return lo % 2 == 0 and lo >= 2 and hi == lo + 1
    return False


class Verdict(str, Enum):
    UNKNOWN = "Unknown"
    MULTIPLE_KNOWN = "MultipleKnown"
    UNIQUE_UP_TO_EQUIVALENCE = "UniqueUpToEquivalence"
    UNIQUE_UP_TO_ISO = "UniqueUpToIso"

    @property
    def rank(self) -> int:
        return list(Verdict).index(self)


@dataclass
class UniquenessReport:
    descriptor: OrbitDescriptor
    verdict: Verdict
    reasons: list[tuple[str, bool]] = field(default_factory=list)
    polarization_count: int | None = None
    reversal_class_count: int | None = None

    def matched(self) -> list[str]:
        return [name for name, ok in self.reasons if ok]

    def to_json(self) -> dict:
        return {
            "descriptor": str(self.descriptor),
            "family": self.descriptor.family,
            "verdict": self.verdict.value,
            "criteria": [{"id": name, "matched": ok} for name, ok in self.reasons],
            "polarization_count": self.polarization_count,
            "reversal_class_count": self.reversal_class_count,
        }


# criterion id -> verdict it certifies when matched
CRITERIA = {
    "a1_degeneration_list": Verdict.UNIQUE_UP_TO_ISO,
    "rectangular": Verdict.UNIQUE_UP_TO_ISO,
    "bcd_parity_blocks": Verdict.UNIQUE_UP_TO_ISO,
    "largest_part_two": Verdict.UNIQUE_UP_TO_EQUIVALENCE,
}


def uniqueness_report(o: OrbitDescriptor) -> UniquenessReport:
    reasons = [("a1_degeneration_list", check_prop_A1_list(o))]
    pol = classes = None
    if o.family == "A":
        reasons.append(("rectangular", check_rectangular(o)))
        reasons.append(("largest_part_two", bool(o.partition.parts) and o.partition[0] == 2))
        comps = orderings(dual(o.partition))
        pol = len(comps)
        classes = len(reversal_classes(comps))
    else:
        reasons.append(("bcd_parity_blocks", check_BCD_condition(o)))

    verdict = Verdict.UNKNOWN
    for name, ok in reasons:
        if ok and CRITERIA[name].rank > verdict.rank:
            verdict = CRITERIA[name]
    if verdict == Verdict.UNKNOWN and pol is not None and pol >= 2:
        verdict = Verdict.MULTIPLE_KNOWN
    return UniquenessReport(o, verdict, reasons, pol, classes)
