import pytest

import oracles
from boxkite import topology as tp
from boxkite.assessors import BACKSLASH, SLASH, Diagonal, StrutContext
from boxkite.cdp import unit, unit_product

SEDENION_S = range(1, 8)


def sedenion(s):
    (bk,) = tp.assemble_boxkites(StrutContext(4, s))
    return bk


@pytest.mark.parametrize("s", SEDENION_S)
def test_lettering_matches_reference_table(s):
    bk = sedenion(s)
    assert {p: (a.low, a.high) for p, a in bk.vertices.items()} == oracles.GOLDEN_VERTICES[s]


@pytest.mark.parametrize("s", SEDENION_S)
def test_sedenion_shape(s):
    bk = sedenion(s)
    assert len(bk.edges) == 12
    assert sorted(bk.edges.values()) == [-1] * 6 + [1] * 6
    for p, q in bk.struts:
        assert bk.edge_sign(p, q) is None
    sails = tp.classify_sails(bk)
    assert [s.kind for s in sails] == ["zigzag", "trefoil", "trefoil", "trefoil"]
    assert sails[0].edge_signs == (-1, -1, -1)
    for sail in sails[1:]:
        assert sorted(sail.edge_signs) == [-1, 1, 1]
        assert all(t.is_associative() for t in tp.q_copies(sail))
    # the negative edges are the zigzag and vent triangles
    for p, q in [("A", "B"), ("B", "C"), ("A", "C"), ("D", "E"), ("E", "F"), ("D", "F")]:
        assert bk.edge_sign(p, q) == -1


def test_hexagon_products_for_first_strut_constant():
    bk = sedenion(1)
    assert unit_product(unit(bk["A"].low), unit(bk["D"].low)) == unit(7)
    assert unit_product(unit(bk["A"].high), unit(bk["D"].high)) == unit(7, -1)


@pytest.mark.parametrize("s", SEDENION_S)
def test_orientation_audit(s):
    audit = tp.orientation_audit(sedenion(s))
    assert audit.hexagon_ok and audit.star_ok
    assert len(audit.lines()) == 4


@pytest.mark.parametrize("n", [4, 5, 6])
def test_boxkite_counts_match_brute_force(n):
    counts = [len(tp.assemble_boxkites(StrutContext(n, s))) for s in range(1, 1 << (n - 1))]
    assert counts == oracles.DERIVED_BOXKITES[n]
    assert counts == [oracles.brute_boxkite_count(n, s) for s in range(1, 1 << (n - 1))]


def test_pathion_boxkites_share_assessors():
    ctx = StrutContext(5, 1)
    kites = tp.assemble_boxkites(ctx)
    assert len(kites) == 7
    assert tp.component_count(ctx) == 1
    counts = {}
    for bk in kites:
        for a in bk.vertices.values():
            counts[a] = counts.get(a, 0) + 1
    assert len(counts) == 14 and set(counts.values()) == {3}
    assert tp.boxkite_for(ctx, [2, 4]).lows >= {2, 4}
    with pytest.raises(LookupError):
        tp.boxkite_for(ctx, [2, 4, 8])


def test_diagonal_count():
    assert tp.diagonal_count(4) == 84


@pytest.mark.parametrize("s", SEDENION_S)
def test_sail_cycles_close_in_six(s):
    bk = sedenion(s)
    for sail in tp.classify_sails(bk):
        for start in sail.vertices:
            for o in (SLASH, BACKSLASH):
                cyc = tp.sail_cycle(bk, sail, Diagonal(start, o))
                assert cyc.closed and len(cyc) == 6 and cyc.products_vanish(4)
                assert set(cyc.assessors) == set(sail.vertices)
    with pytest.raises(ValueError):
        tp.sail_cycle(bk, tp.classify_sails(bk)[0], Diagonal(bk["F"], SLASH))


@pytest.mark.parametrize("s", SEDENION_S)
def test_tray_rack_circuits(s):
    bk = sedenion(s)
    for tr in tp.tray_racks(bk):
        c1, c2 = tr.circuits
        assert len(c1) == len(c2) == 4
        assert c1.closed and c2.closed and c1.products_vanish(4) and c2.products_vanish(4)
        assert not set(c1.steps) & set(c2.steps)
        for d1, d2 in zip(c1.steps, c2.steps):
            assert d1.assessor == d2.assessor and d1.orientation == -d2.orientation
        assert set(tr.perpendicular_strut).isdisjoint(tr.letters)


@pytest.mark.parametrize("s", SEDENION_S)
def test_royal_hunt_reversed_edges(s):
    bk = sedenion(s)
    found = {tr.label: set(tp.royal_hunt(bk, tr).reversed_edge) for tr in tp.tray_racks(bk)}
    assert found == {"AF": {"D", "E"}, "BE": {"F", "D"}, "CD": {"E", "F"}}
    for tr in tp.tray_racks(bk):
        hunt = tp.royal_hunt(bk, tr)
        assert set(hunt.sides) == {"top", "left", "bottom", "right"}
        assert hunt.sides["top"] == hunt.reversed_edge


@pytest.mark.parametrize("s", SEDENION_S)
def test_twists_vanish_and_target_vent_and_zigzag(s):
    bk = sedenion(s)
    for tr in tp.tray_racks(bk):
        zig, vent = tr.perpendicular_strut
        h = tp.twist_tray_rack(bk, tr.label, "H")
        v = tp.twist_tray_rack(bk, tr.label, "V")
        assert len(h) == len(v) == 4
        assert all(r.vanishes(4) for r in h + v)
        assert {r.target_strut_constant for r in h} == {bk[vent].low}
        assert {r.target_strut_constant for r in v} == {bk[zig].low}
        for r in h + v:
            target = StrutContext(4, r.target_strut_constant)
            target_kite = sedenion(r.target_strut_constant)
            d1, d2 = r.twisted_edge
            assert target.contains(d1.assessor) and target.contains(d2.assessor)
            assert target_kite.edge_sign(target_kite.letter_of(d1.assessor),
                                         target_kite.letter_of(d2.assessor)) is not None


def test_twist_census():
    census = tp.twist_census(4)
    assert len(census) == 21
    assert all(e.xor_closed() for e in census.values())
    assert set(census[3, "AF"].triple) == {1, 2, 3}
    assert census[3, "BE"].triple == (3, 6, 5)
    assert census[3, "BE"].targets == {5, 6}


def test_twist_rejects_bad_input():
    bk = sedenion(1)
    ctx = bk.context
    with pytest.raises(ValueError):
        tp.twist(Diagonal(bk["A"], SLASH), Diagonal(bk["F"], SLASH), ctx)
    (d1, d2), _ = tp.edge_diagonals(bk, "A", "B")
    with pytest.raises(ValueError):
        tp.twist(d1, d2, ctx, swap="middle")
    with pytest.raises(ValueError):
        tp.edge_diagonals(bk, "A", "F")
    with pytest.raises(KeyError):
        tp.tray_rack(bk, "AB")


EXPECTED_LANYARDS = {"sail": 8, "trayrack": 12, "quincunx": 48, "chain": 32}


@pytest.mark.parametrize("s", SEDENION_S)
def test_lanyard_families(s):
    bk = sedenion(s)
    for kind, count in EXPECTED_LANYARDS.items():
        found = tp.find_lanyards(bk, kind)
        assert len(found) == count, kind
        assert len({lan.steps for lan in found}) == count
        assert all(lan.closed and lan.products_vanish(4) for lan in found)
    for lan in tp.find_lanyards(bk, "quincunx"):
        assert len(lan) == 10 and len(set(lan.assessors)) == 5 and len(set(lan.steps)) == 10
    for lan in tp.find_lanyards(bk, "chain"):
        assert len(set(lan.steps)) == 12 and tp.is_bicycle_chain(bk, lan)


@pytest.mark.parametrize("s", SEDENION_S)
def test_quincunx_detours_bypass_reversed_edge(s):
    bk = sedenion(s)
    detours = tp.quincunx_detours(bk)
    assert set(detours) == {"AF", "BE", "CD"}
    assert all(len(v) == 2 for v in detours.values())


def test_unknown_lanyard_kind():
    with pytest.raises(ValueError):
        tp.find_lanyards(sedenion(1), "spiral")


def test_pathion_substructures_hold():
    """Sails, circuits and lanyards are local to a box-kite, so they survive at N=5."""
    for s in (1, 9, 15):
        for bk in tp.assemble_boxkites(StrutContext(5, s)):
            for sail in tp.classify_sails(bk):
                cyc = tp.sail_cycle(bk, sail, Diagonal(sail.vertices[0], SLASH))
                assert cyc.closed and len(cyc) == 6 and cyc.products_vanish(5)
            for tr in tp.tray_racks(bk):
                assert all(c.closed and c.products_vanish(5) for c in tr.circuits)
