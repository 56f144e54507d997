"""Smoke tests for the python extension module."""

import math

try:
    import spinrep as sr
except ImportError:  # in-build tree: the extension is importable directly
    import _core as sr


def test_degree_and_spin():
    assert sr.degree(59, 58) == 3540
    assert sr.degree(0, 0) == 1
    assert sr.twice_spin(59, 58) == 1
    assert sr.spin_values(2, 0) == [-2, 0, 2]


def test_gelfand_naimark_roundtrip():
    pair = sr.to_gelfand_naimark(59, 58)
    assert sr.from_gelfand_naimark(*pair) == (59, 58)


def test_lines_and_multiplets():
    assert sr.line(1, 4) == [(1, 0), (2, 1), (3, 2), (4, 3)]
    assert sr.degree_sequence(1, 5) == [2, 6, 12, 20, 30]
    assert sr.spin_multiplet(2) == [(2, 0), (1, 1), (0, 2)]
    t = sr.tensor_structure(59, 58)
    assert t["complex_dim"] == 234 and t["spinspace_log2"] == 117


def test_clifford_classification():
    assert sr.classify(119, 115) == "H"
    assert sr.classify(1, 1) == "R"
    assert sr.parity_square(135, 131) == 1
    assert sr.charge_class(False, 45, 43) == "truly-neutral"
    a, b = sr.generator_census(0, 2)
    assert a + b == 2
    signs = sr.conjugation_signs(0, 2)
    assert signs["sign_rule"] == signs["sign_product"] == -1
    assert sr.double_conjugation_sign(1, 1) == 1


def test_cpt_table():
    assert sr.cpt_table_is_elementary_abelian()
    table = sr.cpt_table()
    phase, word = table[1][2]
    assert word == "WE"


def test_bivector_metric():
    g6 = sr.bivector_metric()
    assert [g6[i][i] for i in range(6)] == [-1, -1, -1, 1, 1, 1]


def test_lambda3():
    blocks = sr.lambda3_blocks(59, 58)
    assert len(blocks) == 59
    assert blocks[0][0] == (1711, 2)
    assert sum(len(b) for b in blocks) == 3540


def test_su3():
    assert sr.su3_degree(1, 1) == 8
    table = sr.su3_degrees_table(6)
    assert table[6][6] == 343
    assert table[0] == [1, 3, 6, 10, 15, 21, 28]
    assert sr.su3_admissible_degrees(160) == [1, 8, 10, 27, 28, 35, 55, 64,
                                              80, 81, 91, 125, 136, 143, 154]


def test_search_and_mass():
    assert sr.search_rep(1800, 1)[0] == (59, 58)
    assert sr.search_rep(972, 0)[0] == (43, 43)
    assert sr.effective_ratio(59, 58) == (1770, 1)
    assert math.isclose(sr.mgy_mass(59, 58, 1.0), 885.0)
    assert sr.orbit_type([5, 0, 0, 0], 5.0) == "O+_m"


def test_catalog():
    assert sr.octet_names() == ["F12", "B0", "B1"]
    states = sr.octet_states("F12")
    assert len(states) == 8
    proton = [s for s in states if s["name"] == "p"][0]
    assert proton["degree"] == 3540
    assert sr.quark_composition("p") == "uud"
    findings = sr.validate_catalog()
    assert len(findings) == 4
    assert {f["entity"] for f in findings} == {"eta", "phi", "Xi-", "p"}


def test_fit_and_closure():
    fit = sr.fit_octet("B0", quadratic=True)
    assert not fit["rank_deficient"]
    assert math.isfinite(fit["rms"])
    closure = sr.octet_closure("F12")
    assert math.isclose(closure["lhs"], 2257.0)
    assert math.isclose(closure["rhs"], 2268.5)
