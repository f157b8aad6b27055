import pytest

import weilrep


def test_euler_factor_of_fixture():
    rep = weilrep.fixture("example_3_1")
    assert weilrep.euler_factor(rep, "desc(1;)")["polynomial"] == "1 + 4T + 13T^2"
    assert weilrep.euler_factor(rep, "desc(4; (g,1))")["polynomial"] == "1 - 6T + 13T^2"
    assert weilrep.euler_factor(rep, "base")["roots"] == []


def test_reconstruct_from_table():
    result = weilrep.reconstruct(weilrep.fixture("example_3_1_table"))
    def atoms(text):
        return sorted(line for line in text.splitlines() if line.startswith("atom"))

    assert atoms(result["rep"]) == atoms(weilrep.fixture("example_3_1"))
    assert len(result["queries"]) >= 1


def test_roundtrip():
    assert weilrep.roundtrip(weilrep.fixture("example_3_2"))
    passed, total = weilrep.corpus_roundtrip(5, 20)
    assert (passed, total) == (20, 20)


def test_curves():
    assert weilrep.zeta(weilrep.fixture("genus2_curve"))["polynomial"] == "1 - T + 2T^2 - 3T^3 + 9T^4"
    assert weilrep.count_points(weilrep.fixture("genus2_curve"), degree=2) == [(3, 3), (9, 13)]
    assert weilrep.zeta(weilrep.fixture("node_fiber_2633"))["roots"] == ["cyc(1; 0:1)", "cyc(1; 0:1)"]
    curve = "weilrep v1 curve\nmodel elliptic\nfield 13 1\na 0 0 0 -1 0\n"
    assert weilrep.count_points(curve) == [(13, 8)]


def test_stoll():
    verdict = weilrep.stoll([1, -1, 2, -3, 9])
    assert verdict["holds"]
    assert verdict["factorization"] == "6561 (x^4 + 4/3x^3 + x^2 + 4/3x + 1)^2(x^4 + x^3 + 16/9x^2 + x + 1)"
    assert not weilrep.stoll([1, 0, 0, 0, 9])["holds"]
    with pytest.raises(weilrep.DomainError, match="reducible"):
        weilrep.stoll([1, 2, 2, 2, 1])


def test_root_numbers():
    for trivial in (True, False):
        for sign in (1, -1):
            assert weilrep.twist_root_number(trivial, sign) == -1


def test_errors():
    with pytest.raises(weilrep.ParseError, match="line 2"):
        weilrep.reprint("weilrep v1 curve\nmodel conic\nfield 5 1\n")
    with pytest.raises(weilrep.DomainError):
        weilrep.fixture("no_such_fixture")
    assert "sd16" in weilrep.fixture_names()
