import pytest

import srtrace


def test_rp2_trace():
    n, facets = srtrace.corpus("rp2_6")
    t = srtrace.trace(n, facets, "gf:3")
    assert (t["dims"], t["verdict"]) == ([0, 0, 21], "TrMaxSquared")
    assert srtrace.trace_class(n, facets, "gf:2") == "NotCohenMacaulay"


def test_classify_document():
    doc = srtrace.classify(4, [[1, 2], [2, 3], [3, 4]], fields=["q", "gf:2"], oracle=True)
    assert doc["schema"] == srtrace.REPORT_SCHEMA
    assert [r["trace_class"] for r in doc["reports"]] == ["TrMaximal", "TrMaximal"]
    assert doc["reports"][0]["oracle"]["status"] == "PASS"


def test_homology_and_counts():
    n, facets = srtrace.corpus("torus7")
    assert srtrace.reduced_betti(n, facets, "q") == [0, 0, 2, 1]
    assert srtrace.homology(n, facets)["homology"][0]["reduced_betti"] == [0, 2, 1]
    assert [srtrace.count_complexes(k) for k in range(4)] == [2, 3, 6, 20]


def test_errors():
    with pytest.raises(ValueError):
        srtrace.corpus("klein")
    with pytest.raises(ValueError):
        srtrace.trace_class(3, [], "q")
    with pytest.raises(ValueError):
        srtrace.classify(3, [[1]], fields=["gf:4"])


def test_small_sweep():
    s = srtrace.sweep(3)
    assert s["ok"] and s["total"] == 19
