import pytest
from hypothesis import given, strategies as st

from orbitres.orbits import (
    OrbitDescriptor,
    OrbitError,
    Verdict,
    check_BCD_condition,
    check_prop_A1_list,
    check_rectangular,
    orbit_dim_A,
    parse_descriptor,
    uniqueness_report,
)
from orbitres.partitions import Partition, dominates, partitions_of
from orbitres.springer import tangent_dim_oracle


def brute_valid(family, size, parts):
    """Oracle: direct reading of the parity rules."""
    if sum(parts) != size:
        return False
    if family == "B" and size % 2 == 0 or family == "D" and size % 2 == 1:
        return False
    for v in set(parts):
        k = parts.count(v)
        if family in "BD" and v % 2 == 0 and k % 2:
            return False
        if family == "C" and v % 2 == 1 and k % 2:
            return False
    return True


def test_parse_descriptor():
    o = parse_descriptor("sl(6):[3,2,1]")
    assert (o.family, o.size, o.partition) == ("A", 6, Partition([3, 2, 1]))
    assert parse_descriptor("so(8):[3,1^5]").partition == Partition([3, 1, 1, 1, 1, 1])
    assert parse_descriptor("so(5):[3,1,1]").family == "B"
    assert parse_descriptor("so(8):[2,2,2,2]").family == "D"
    assert parse_descriptor("sp(4):[2,2]").family == "C"
    assert str(parse_descriptor("so(8):[3,1^5]")) == "so(8):[3,1,1,1,1,1]"
    with pytest.raises(OrbitError, match="position"):
        parse_descriptor("gl(3):[3]")
    with pytest.raises(OrbitError, match="position"):
        parse_descriptor("sl(3):[2,x]")
    with pytest.raises(OrbitError):
        parse_descriptor("sl(4):[2,1]")


@pytest.mark.parametrize("family", "BCD")
def test_validation_matches_parity_rule(family):
    for n in range(1, 11):
        for d in partitions_of(n):
            ok = brute_valid(family, n, list(d.parts))
            if ok:
                OrbitDescriptor(family, n, d)
            else:
                with pytest.raises(OrbitError):
                    OrbitDescriptor(family, n, d)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=7), st.sampled_from("ABCD"))
def test_validation_property(parts, family):
    d = Partition.from_unsorted(parts)
    ok = brute_valid(family, d.n, list(d.parts))
    try:
        OrbitDescriptor(family, d.n, d)
        assert ok
    except OrbitError:
        assert not ok


def test_orbit_dim_examples():
    assert orbit_dim_A(Partition([2, 1])) == 4 == tangent_dim_oracle(Partition([2, 1]), 3)
    for n in range(1, 7):
        assert orbit_dim_A(Partition([1] * n)) == 0
    assert orbit_dim_A(Partition([3, 2, 1])) == 22 == tangent_dim_oracle(Partition([3, 2, 1]), 6)


def test_orbit_dim_strictly_monotone_along_dominance():
    for n in range(1, 11):
        ps = list(partitions_of(n))
        for p in ps:
            assert orbit_dim_A(p) % 2 == 0
            for q in ps:
                if p != q and dominates(p, q):
                    assert orbit_dim_A(p) > orbit_dim_A(q)


def test_a1_list():
    assert check_prop_A1_list(parse_descriptor("so(5):[3,1,1]"))
    assert check_prop_A1_list(parse_descriptor("so(8):[2,2,2,2]"))
    assert check_prop_A1_list(parse_descriptor("so(8):[3,3,1,1]"))
    assert not check_prop_A1_list(parse_descriptor("sl(4):[2,2]"))
    assert not check_prop_A1_list(parse_descriptor("so(9):[3,3,1,1,1]"))


def test_rectangular():
    assert check_rectangular(parse_descriptor("sl(6):[2,2,2]"))
    assert not check_rectangular(parse_descriptor("sl(6):[3,2,1]"))
    assert check_rectangular(parse_descriptor("sl(4):[4]"))


def test_bcd_condition():
    assert check_BCD_condition(parse_descriptor("sp(4):[2,2]"))
    # [3,3,2,2] is a valid type D partition of 10
    o = parse_descriptor("so(10):[3,3,2,2]")
    assert o.family == "D" and check_BCD_condition(o)
    assert not check_BCD_condition(parse_descriptor("so(5):[3,1,1]"))
    assert check_BCD_condition(parse_descriptor("sp(6):[3,3]")) is False
    assert not check_BCD_condition(parse_descriptor("so(11):[5,2,2,1,1]"))
    assert check_BCD_condition(parse_descriptor("so(7):[3,2,2]"))
    with pytest.raises(OrbitError, match="wrong family"):
        check_BCD_condition(parse_descriptor("sl(3):[2,1]"))


def test_report_minimal_orbit():
    for n in range(2, 10):
        o = OrbitDescriptor("A", n + 1, Partition([2] + [1] * (n - 1)))
        r = uniqueness_report(o)
        assert r.verdict == Verdict.UNIQUE_UP_TO_EQUIVALENCE
        assert r.polarization_count == 2
        assert r.reversal_class_count == 1


def test_report_examples():
    r = uniqueness_report(parse_descriptor("sl(6):[3,2,1]"))
    assert r.verdict == Verdict.MULTIPLE_KNOWN
    assert (r.polarization_count, r.reversal_class_count) == (6, 3)
    r = uniqueness_report(parse_descriptor("sp(4):[2,2]"))
    assert r.verdict == Verdict.UNIQUE_UP_TO_ISO
    assert set(r.matched()) == {"a1_degeneration_list", "bcd_parity_blocks"}
    r = uniqueness_report(parse_descriptor("sl(2):[2]"))
    assert r.verdict == Verdict.UNIQUE_UP_TO_ISO and "rectangular" in r.matched()
    r = uniqueness_report(parse_descriptor("so(9):[5,3,1]"))
    assert r.verdict == Verdict.UNKNOWN and r.polarization_count is None


def test_report_json_fields():
    data = uniqueness_report(parse_descriptor("sl(4):[2,2]")).to_json()
    assert {"verdict", "criteria", "polarization_count", "reversal_class_count"} <= set(data)
    assert data["verdict"] == "UniqueUpToIso"
    assert data["polarization_count"] == 1


def test_verdict_consistency_sweep():
    for n in range(1, 9):
        for d in partitions_of(n):
            r = uniqueness_report(OrbitDescriptor("A", n, d))
            if r.verdict == Verdict.UNIQUE_UP_TO_ISO:
                assert r.matched()
            if r.verdict == Verdict.MULTIPLE_KNOWN:
                assert not r.matched() and r.polarization_count >= 2
            # a single polarization happens exactly for rectangular partitions
            assert (r.polarization_count == 1) == check_rectangular(OrbitDescriptor("A", n, d))
