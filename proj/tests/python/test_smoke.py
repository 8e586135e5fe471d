import pytest

import mskw

Z5 = {"type": "cyclic", "n": 5}


def test_group_table():
    g = mskw.build_group(Z5)
    assert g["order"] == 5
    assert g["product"][2][4] == 1


def test_kappa_v_on_cayley_relation():
    graph = mskw.cayley(Z5, [0, 1, 2])
    report = mskw.kappa_v(graph, 0, "both-agree")
    assert report["kappa_v"] == 2
    assert report["K_v"] == [0]


def test_boundary_operators():
    graph = mskw.cayley({"type": "cyclic", "n": 7}, [0, 1, 2])
    assert mskw.image(graph, [0, 1, 2]) == [0, 1, 2, 3, 4]
    assert mskw.boundary(graph, [0, 1, 2]) == [3, 4]
    assert mskw.exterior(graph, [0, 1, 2]) == [5, 6]
    assert mskw.iterated_image(mskw.cayley({"type": "cyclic", "n": 13}, [0, 1, 4]), 0, 2) == [0, 1, 2, 4, 5, 8]


def test_weak_connectivity():
    report = mskw.weak_connectivity(mskw.cayley(Z5, [0, 1]))
    assert report["kappa"] == 1
    assert report["atoms"] == [[0], [1], [2], [3], [4]]


def test_certificates_round_trip():
    cycles = mskw.mader_cycles(Z5, [1, 2])
    assert cycles["cycles"] == [[0, 1, 3], [0, 2, 4]]
    for cert in (cycles, mskw.sigma_permutation(Z5, [1, 2]), mskw.shepherdson_sequence({"type": "cyclic", "n": 6}, [2, 3])):
        assert mskw.check_certificate(cert)["valid"]


def test_campaign():
    report = mskw.run_campaign({"campaign": "mskw", "family": {"family": "cyclic-range", "min_order": 2, "max_order": 6}})
    assert report["all_passed"]
    assert report["counterexample"] is None


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        mskw.build_group({"type": "klein"})
    with pytest.raises(ValueError):
        mskw.mader_cycles(Z5, [0, 1])
