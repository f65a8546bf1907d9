import pytest

import quivermod as qm


def test_builtin_quivers():
    c = qm.determinantal(2)
    assert c.name == "determinantal2"
    assert c.vertex_count == 2
    assert [a[0] for a in c.arrows] == ["a", "c", "k1", "k2"]
    assert c.dimension == [1, 1]
    assert c.theta == [-1, 1]
    p = qm.preprojective_a(2)
    assert p.vertex_count == 3
    assert p.relation_count == 3


def test_dsl_round_trip():
    for q in (qm.determinantal(3), qm.preprojective_a(3)):
        assert qm.parse_quiver(q.to_dsl()) == q


def test_thin_stability():
    c = qm.determinantal(2)
    assert qm.stability(c, [1, 0, 5, -2])["status"] == "stable"
    v = qm.stability(c, [0, 0, 1, 1])
    assert v["status"] == "unstable"
    assert v["witness"]["vertices"] == ["0"]
    assert v["witness"]["theta_value"] == "-1"
    assert qm.stability(c, ["1/2", 0, 0, 0], framed=True)["status"] == "stable"
    assert qm.stability(c, [0, 0, 0, 0], theta=[0, 0])["status"] == "strictly-semistable"


def test_jordan_holder_and_s_equivalence():
    c = qm.determinantal(2)
    f = qm.jordan_holder(c, [1, 0, 0, 0], theta=[0, 0])
    assert sorted(f["factor_dimensions"]) == [["0", "1"], ["1", "0"]]
    assert qm.s_equivalent(c, [1, 0, 0, 0], [0, 0, 0, 5], theta=[0, 0])
    assert not qm.s_equivalent(c, [1, 0, 1, 0], [1, 0, 0, 0], theta=[0, 0])


def test_framing_and_genericity():
    assert qm.framing_from_ranks([1, 1, 1]) == ([1, 1, 1], [-2, 1, 1])
    assert qm.theta_pairing([-1, 1], [1, 1]) == 0
    assert qm.is_generic([-1, 1], [1, 1])
    assert not qm.is_generic([0, 0], [1, 1])


def test_invariants_and_moduli():
    ring = qm.invariant_ring(qm.determinantal(2))
    assert sorted(g["monomial"] for g in ring["generators"]) == ["a*k1", "a*k2", "c*k1", "c*k2"]
    assert len(ring["relations"]) == 1
    atlas = qm.moduli_atlas(qm.determinantal(2))
    assert [c["name"] for c in atlas["charts"]] == ["a", "c"]
    assert all(c["free"] for c in atlas["charts"])
    reference = {
        "rank": "3",
        "rays": [["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"], ["1", "1", "-1"]],
        "cones": [["0", "1", "3"], ["0", "2", "3"]],
    }
    assert qm.fan_equivalent(atlas["fan"], reference)
    pp = qm.moduli_atlas(qm.preprojective_a(2))
    assert len(pp["fan"]["rays"]) == 4


def test_errors_carry_codes():
    with pytest.raises(qm.QuiverError, match="BAD_PARAMETER"):
        qm.determinantal(0)
    with pytest.raises(qm.QuiverError, match="NONCOMPOSABLE_TERM"):
        qm.parse_quiver("quiver q\nvertices 2\narrow a: 0 -> 1\nrelation a*a\n")
    with pytest.raises(ValueError):
        qm.stability(qm.determinantal(2), [1, 0, 0, 0], theta=[1, 1])
