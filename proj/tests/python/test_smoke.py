import json

import pytest

import fullerene_matchings as fm


def test_fixtures_and_counts():
    c20 = fm.dodecahedron()
    assert c20.p == 20
    assert len(c20.pentagons) == 12
    c60 = fm.leapfrog(c20)
    assert c60.p == 60
    assert c60.graph.face_count == 32
    assert fm.count_perfect_matchings(c20.graph) == len(fm.brute_enumerate(c20.graph))
    assert fm.count_perfect_matchings(c60.graph) == 12500


def test_big_count_is_python_int():
    c540 = fm.leapfrog(fm.leapfrog(fm.leapfrog(fm.dodecahedron())))
    n = fm.count_perfect_matchings(c540.graph)
    assert isinstance(n, int)
    assert n > 2**64


def test_io_round_trip():
    g = fm.leapfrog(fm.dodecahedron()).graph
    data = fm.encode_planar_code([g, g])
    assert data.startswith(b">>planar_code<<")
    back = fm.parse_planar_code(data)
    assert len(back) == 2
    assert back[1].rotation() == g.rotation()
    text = fm.emit_rotation_text(g)
    assert fm.emit_rotation_text(fm.parse_rotation_text(text)) == text


def test_errors_raise():
    with pytest.raises(fm.FullereneError, match="ParseError"):
        fm.parse_rotation_text("0: 1 2\n1: x\n")
    k4 = fm.parse_rotation_text("0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n")
    with pytest.raises(fm.FullereneError):
        fm.validate_fullerene(k4)
    with pytest.raises(ValueError):
        fm.lower_bounds(61)


def test_analyze_report():
    c180 = fm.leapfrog(fm.leapfrog(fm.dodecahedron()))
    r = fm.analyze(c180.graph, switch_cap=1024)
    assert r["schema"] == 1
    assert r["p"] == 180
    assert r["certified"] is True
    assert r["invariants_ok"] is True
    assert int(r["exact_count"]) >= int(r["switch_count"])
    assert json.dumps(r) == json.dumps(fm.analyze(c180.graph, switch_cap=1024))


def test_witnesses_and_bounds():
    c540 = fm.leapfrog(fm.leapfrog(fm.leapfrog(fm.dodecahedron())))
    w = fm.select_witnesses(c540)
    assert w["certified"]
    assert len(w["witnesses"]) >= w["lower_bound"] == 2
    b = fm.lower_bounds(60)
    assert b["zz"] == 47
    assert b["theorem1_exponent"] == (-320, 61)
