import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from orbitres.exactlinalg import ExactMatrix
from orbitres.quotientgroup import (
    DIHEDRAL_GENERATORS,
    DIHEDRAL_RELATIONS,
    OMEGA,
    SIGMA1,
    SIGMA2,
    TAU,
    U,
    GroupError,
    SymplecticForm,
    conjugacy_classes,
    dihedral_example,
    fixed_codimension,
    generate,
    reflection_classes,
    single_class_hypothesis,
    symplectic_reflections,
    verify_intertwiner,
)

I4 = ExactMatrix.identity(4)


def as_signed_permutation(m):
    """Signed permutation matrix -> permutation of the 8 vectors +-e_i."""
    image = []
    for sign in (1, -1):
        for j in range(4):
            i = next(i for i in range(4) if m[i, j] != 0)
            s = int(m[i, j]) * sign
            image.append(i if s == 1 else i + 4)
    return Permutation(image)


def test_generators_match_coordinate_formulas():
    v = ExactMatrix([[1], [2], [3], [5]])
    assert (SIGMA1 @ v).format() == "1;2;-3;-5"
    assert (SIGMA2 @ v).format() == "-1;-2;3;5"
    assert (TAU @ v).format() == "3;5;1;2"
    assert (U @ v).format() == "-2;-3;4;7"


def test_orders():
    assert generate(list(DIHEDRAL_GENERATORS.values())).order == 8
    assert generate([I4]).order == 1
    assert generate([-I4]).order == 2
    with pytest.raises(GroupError, match="too large or infinite"):
        generate([ExactMatrix([[1, 1], [0, 1]])], bound=50)


def test_class_count_against_sympy():
    g = generate(list(DIHEDRAL_GENERATORS.values()))
    classes = conjugacy_classes(g)
    oracle = PermutationGroup([as_signed_permutation(m) for m in DIHEDRAL_GENERATORS.values()])
    assert oracle.order() == 8
    assert len(classes) == len(oracle.conjugacy_classes()) == 5
    assert sorted(len(c) for c in classes) == sorted(len(c) for c in oracle.conjugacy_classes())
    assert sum(len(c) for c in classes) == g.order


def test_small_class_counts():
    assert len(conjugacy_classes(generate([I4]))) == 1
    assert len(conjugacy_classes(generate([-I4]))) == 2


def test_form_preserved():
    g = generate(list(DIHEDRAL_GENERATORS.values()))
    for x in g.elements:
        assert x.transpose() @ OMEGA.matrix @ x == OMEGA.matrix


def test_reflections():
    g = generate(list(DIHEDRAL_GENERATORS.values()))
    refl = symplectic_reflections(g, OMEGA)
    assert SIGMA1 in refl
    assert -I4 not in refl and I4 not in refl
    assert fixed_codimension(SIGMA1) == 2
    assert fixed_codimension(-I4) == 4
    assert len(refl) == 4
    # closed under conjugation
    for h in g.elements:
        for r in refl:
            assert h @ r @ h.inverse() in refl
    assert len(reflection_classes(g, OMEGA)) == 2


def test_single_class_hypothesis():
    g = generate(list(DIHEDRAL_GENERATORS.values()))
    assert single_class_hypothesis(g, OMEGA)["holds"] is False
    assert single_class_hypothesis(generate([SIGMA1]), OMEGA) == {
        "holds": True, "no_reflections": False, "reflection_class_count": 1}
    trivial = single_class_hypothesis(generate([I4]), OMEGA)
    assert trivial["holds"] and trivial["no_reflections"]
    # another generating set of the same group
    g2 = generate([SIGMA1 @ TAU, TAU])
    assert g2.order == 8 and set(g2.elements) == set(g.elements)
    assert single_class_hypothesis(g2, OMEGA)["holds"] is False


def test_form_violation_names_element():
    # flipping x alone negates dx^dy
    g = generate([ExactMatrix.diag([-1, 1, 1, 1])])
    with pytest.raises(GroupError, match="element 1"):
        symplectic_reflections(g, OMEGA)


def test_symplectic_form_validation():
    with pytest.raises(GroupError):
        SymplecticForm(I4)
    with pytest.raises(GroupError):
        SymplecticForm(ExactMatrix.zeros(2))


def test_intertwiner():
    rep = verify_intertwiner(U, DIHEDRAL_RELATIONS, DIHEDRAL_GENERATORS)
    assert rep["all_hold"] and len(rep["relations"]) == 3
    assert verify_intertwiner(I4, [(("u", "sigma1"), ("sigma1", "u"))], DIHEDRAL_GENERATORS)["all_hold"]
    assert not verify_intertwiner(I4, [(("u", "sigma1"), ("tau", "u"))], DIHEDRAL_GENERATORS)["all_hold"]
    with pytest.raises(GroupError, match="unknown generator"):
        verify_intertwiner(U, [(("u", "rho"), ("u",))], DIHEDRAL_GENERATORS)


def test_example_report():
    rep = dihedral_example()
    assert rep["order"] == 8
    assert rep["class_count"] == 5
    assert rep["reflection_class_count"] == 2
    assert rep["single_class_hypothesis"]["holds"] is False
    assert rep["intertwiner"]["all_hold"]
