"""Partitions, compositions, conjugation and dominance.

A partition is stored as a tuple of weakly decreasing positive integers; the
empty tuple is the partition of zero.  Compositions keep their order.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise PartitionError(f"parts must be positive: {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts must be weakly decreasing: {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(parse_parts(text))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return format_parts(self.parts)

    def __repr__(self) -> str:
        return f"Partition([{self}])"

    def multiplicities(self) -> Counter:
        return Counter(self.parts)


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise PartitionError(f"parts must be positive: {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return format_parts(self.parts)

    def __repr__(self) -> str:
        return f"Composition(({self}))"

    def reverse(self) -> "Composition":
        return Composition(reversed(self.parts))

    def sorted(self) -> Partition:
        return Partition.from_unsorted(self.parts)


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_parts(text: str) -> list[int]:
    """Parse ``"3,2,1"`` or exponent shorthand ``"3,1^5"`` into a list of ints.

    Surrounding brackets are tolerated.  The empty string gives ``[]``.
    """
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return []
    out: list[int] = []
    offset = 0
    for token in body.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise PartitionError(f"cannot parse part {token.strip()!r} at position {offset}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        out.extend([value] * count)
        offset += len(token) + 1
    return out


def format_parts(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)


def dual(d: Partition) -> Partition:
    """Conjugate partition: the j-th part counts the parts of ``d`` that are >= j."""
    if not d.parts:
        return Partition()
    return Partition(sum(1 for p in d.parts if p >= j) for j in range(1, d.parts[0] + 1))


def dominates(p: Partition, q: Partition) -> bool:
    if p.n != q.n:
        raise PartitionError(f"incomparable sizes: {p.n} and {q.n}")
    sp = sq = 0
    for j in range(max(len(p), len(q))):
        sp += p.parts[j] if j < len(p) else 0
        sq += q.parts[j] if j < len(q) else 0
        if sp < sq:
            return False
    return True


def orderings(s: Partition) -> list[Composition]:
    """All distinct orderings of the parts of ``s``, lexicographically increasing."""
    current = sorted(s.parts)
    out = [Composition(current)]
    while True:
        # next lexicographic permutation of a multiset
        i = len(current) - 2
        while i >= 0 and current[i] >= current[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = len(current) - 1
        while current[j] <= current[i]:
            j -= 1
        current[i], current[j] = current[j], current[i]
        current[i + 1:] = reversed(current[i + 1:])
        out.append(Composition(current))


def ordering_count(s: Partition) -> int:
    count = factorial(len(s))
    for mult in s.multiplicities().values():
        count //= factorial(mult)
    return count


def reversal_classes(cs: Sequence[Composition]) -> list[tuple[Composition, ...]]:
    """Group compositions into classes ``{c, reverse(c)}``.

    Classes are listed in order of first appearance; within a class the
    earlier-listed member comes first.  Palindromes form singletons.
    """
    seen: dict[Composition, int] = {}
    classes: list[list[Composition]] = []
    for c in cs:
        if c in seen:
            continue
        r = c.reverse()
        if r in seen:
            classes[seen[r]].append(c)
            seen[c] = seen[r]
        else:
            seen[c] = len(classes)
            classes.append([c])
    return [tuple(cls) for cls in classes]


def partitions_of(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, starting from ``[n]``."""
    if n == 0:
        yield Partition()
        return

    def rec(remaining: int, largest: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p, prefix)
            prefix.pop()

    yield from rec(n, n, [])
