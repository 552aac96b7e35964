"""Finite groups of rational matrices: closure, conjugacy classes, and
symplectic reflections (elements fixing a subspace of codimension two).

The built-in example is the dihedral group of order 8 acting on ``C^4`` with
coordinates ``(x, y, z, w)``, generated by

* ``sigma1: (x, y, z, w) -> (x, y, -z, -w)``
* ``sigma2: (x, y, z, w) -> (-x, -y, z, w)``
* ``tau:    (x, y, z, w) -> (z, w, x, y)``

preserving ``dx^dy + dz^dw``, together with the linear map
``u(x, y, z, w) = (x - z, y - w, x + z, y + w)`` which intertwines the
generators.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exactlinalg import ExactMatrix, MatrixError, rank


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class MatrixGroup:
    elements: tuple[ExactMatrix, ...]
    generators: tuple[ExactMatrix, ...]

    @property
    def dimension(self) -> int:
        return self.elements[0].rows

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: ExactMatrix) -> bool:
        return g in self.elements

    def index(self, g: ExactMatrix) -> int:
        return self.elements.index(g)


@dataclass(frozen=True)
class SymplecticForm:
    matrix: ExactMatrix

    def __post_init__(self):
        m = self.matrix
        if m.transpose() != -m:
            raise GroupError("symplectic form must be antisymmetric")
        if rank(m) != m.rows:
            raise GroupError("symplectic form must be nondegenerate")

    def preserved_by(self, g: ExactMatrix) -> bool:
        return g.transpose() @ self.matrix @ g == self.matrix


def generate(gens: Sequence[ExactMatrix], bound: int = 1000) -> MatrixGroup:
    """Closure of ``gens`` under multiplication, breadth first.

    Elements are listed in discovery order with the identity first.
    """
    if not gens:
        raise GroupError("need at least one generator")
    n = gens[0].rows
    for g in gens:
        if (g.rows, g.cols) != (n, n):
            raise GroupError("generators must be square of equal size")
        if rank(g) != n:
            raise GroupError(f"generator {g.format()} is not invertible")
    ident = ExactMatrix.identity(n)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if y not in seen:
                    if len(elements) >= bound:
                        raise GroupError("group too large or infinite")
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    for x in elements:
        if x.inverse() not in seen:
            raise GroupError(f"inverse of {x.format()} missing from closure")
    return MatrixGroup(tuple(elements), tuple(gens))


def conjugacy_classes(g: MatrixGroup) -> list[tuple[ExactMatrix, ...]]:
    """Classes in order of their first element's position in ``g.elements``."""
    inverses = {x: x.inverse() for x in g.elements}
    assigned: set[ExactMatrix] = set()
    classes = []
    for x in g.elements:
        if x in assigned:
            continue
        cls = []
        for h in g.elements:
            y = h @ x @ inverses[h]
            if y not in assigned:
                assigned.add(y)
                cls.append(y)
        classes.append(tuple(sorted(cls, key=g.index)))
    return classes


def fixed_codimension(g: ExactMatrix) -> int:
    return rank(g - ExactMatrix.identity(g.rows))


def _check_form(g: MatrixGroup, omega: SymplecticForm) -> None:
    for k, x in enumerate(g.elements):
        if not omega.preserved_by(x):
            raise GroupError(f"element {k} ({x.format()}) does not preserve the symplectic form")


def symplectic_reflections(g: MatrixGroup, omega: SymplecticForm) -> list[ExactMatrix]:
    _check_form(g, omega)
    return [x for x in g.elements if fixed_codimension(x) == 2]


def reflection_classes(g: MatrixGroup, omega: SymplecticForm) -> list[tuple[ExactMatrix, ...]]:
    refl = set(symplectic_reflections(g, omega))
    return [cls for cls in conjugacy_classes(g) if cls[0] in refl]


def single_class_hypothesis(g: MatrixGroup, omega: SymplecticForm) -> dict:
    """Whether the symplectic reflections form one conjugacy class.

    With no reflections at all the answer is vacuously true, flagged by
    ``no_reflections``.
    """
    classes = reflection_classes(g, omega)
    return {
        "holds": len(classes) <= 1,
        "no_reflections": not classes,
        "reflection_class_count": len(classes),
    }


def evaluate_word(word: Sequence[str], named: Mapping[str, ExactMatrix]) -> ExactMatrix:
    """Composite ``named[w0] o named[w1] o ...``; the last name acts first."""
    if not word:
        raise GroupError("empty word")
    result = None
    for name in word:
        if name not in named:
            raise GroupError(f"unknown generator {name!r}")
        result = named[name] if result is None else result @ named[name]
    return result


def verify_intertwiner(u: ExactMatrix, relations: Sequence[tuple[Sequence[str], Sequence[str]]],
                       named: Mapping[str, ExactMatrix]) -> dict:
    table = dict(named)
    table["u"] = u
    results = []
    for lhs, rhs in relations:
        try:
            ok = evaluate_word(lhs, table) == evaluate_word(rhs, table)
        except MatrixError as exc:
            raise GroupError(f"cannot compare {lhs} and {rhs}: {exc}") from exc
        results.append({"lhs": " o ".join(lhs), "rhs": " o ".join(rhs), "holds": ok})
    return {"relations": results, "all_hold": all(r["holds"] for r in results)}


# the dihedral example

SIGMA1 = ExactMatrix.diag([1, 1, -1, -1])
SIGMA2 = ExactMatrix.diag([-1, -1, 1, 1])
TAU = ExactMatrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
U = ExactMatrix([[1, 0, -1, 0], [0, 1, 0, -1], [1, 0, 1, 0], [0, 1, 0, 1]])
# dx^dy + dz^dw
OMEGA = SymplecticForm(ExactMatrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]))

DIHEDRAL_GENERATORS = {"sigma1": SIGMA1, "sigma2": SIGMA2, "tau": TAU}

DIHEDRAL_RELATIONS = [
    (("u", "sigma1"), ("tau", "u")),
    (("u", "tau"), ("sigma2", "u")),
    (("u", "sigma2"), ("sigma1", "sigma2", "tau", "u")),
]


def dihedral_example() -> dict:
    group = generate(list(DIHEDRAL_GENERATORS.values()))
    classes = conjugacy_classes(group)
    refl = reflection_classes(group, OMEGA)
    return {
        "order": group.order,
        "class_count": len(classes),
        "class_sizes": [len(c) for c in classes],
        "form_preserved": all(OMEGA.preserved_by(x) for x in group.elements),
        "reflection_classes": [[x.format() for x in c] for c in refl],
        "reflection_class_count": len(refl),
        "single_class_hypothesis": single_class_hypothesis(group, OMEGA),
        "intertwiner": verify_intertwiner(U, DIHEDRAL_RELATIONS, DIHEDRAL_GENERATORS),
    }
