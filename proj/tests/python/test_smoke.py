import json
import os
import pathlib

import pytest

import mcsreason

FIXTURES = pathlib.Path(os.environ.get("MCSREASON_FIXTURES", pathlib.Path(__file__).parents[1] / "fixtures"))

OBJECT_QUERY = "ClassAssertion(ExistingObjectType Monument)"


def load(name):
    return mcsreason.parse((FIXTURES / name).read_text())


@pytest.fixture
def monument():
    return load("monument.ofn")


def test_parse_and_check(monument):
    assert len(monument) == 4
    assert monument.ids == ["a1", "a2", "a3", "a4"]
    assert "Monument" in monument.axiom("a1")
    r = mcsreason.check(monument)
    assert r["consistent"] is False
    assert r["kind"] == "DisjointnessClash"
    assert mcsreason.check(load("icecream.ofn")) == {"consistent": True}


def test_mcs_order(monument):
    expected = [["a2", "a3", "a4"], ["a1", "a3", "a4"], ["a1", "a2", "a4"], ["a1", "a2", "a3"]]
    assert mcsreason.mcs(monument) == expected
    assert mcsreason.brute_force_mcs(monument) == expected
    with pytest.raises(mcsreason.Error) as e:
        mcsreason.mcs(monument, max_mcs=2)
    assert mcsreason.error_code(e.value) == "BudgetExceeded"


def test_scores(monument):
    sharp = mcsreason.score(monument, method="sharpmc")
    assert len(sharp) == 4
    assert all(s == 9.0 for _, s in sharp)
    a = mcsreason.score(monument, seed=7)
    assert a == mcsreason.score(monument, seed=7)
    assert [s for _, s in a] == sorted((s for _, s in a), reverse=True)


def test_query(monument):
    verdict, preferred = mcsreason.query(monument, OBJECT_QUERY)
    assert verdict == "undetermined"
    assert len(preferred) == 4
    ice = load("icecream.ofn")
    assert mcsreason.query(ice, "ClassAssertion(Food gelato1)", method="cmcs")[0] == "accepted"
    assert mcsreason.query(ice, "ClassAssertion(Food alice)", method="cmcs")[0] == "rejected"
    assert mcsreason.entails(ice, "ClassAssertion(Food gelato1)")
    assert mcsreason.infers(monument, OBJECT_QUERY, OBJECT_QUERY, method="cmcs")


def test_similarities():
    assert mcsreason.sim_cos([1.0, 0.0], [0.0, 1.0]) == pytest.approx(0.5)
    assert mcsreason.sim_cos([1.0, 2.0], [2.0, 4.0]) == pytest.approx(1.0)
    assert mcsreason.sim_euc([0.0, 0.0], [3.0, 4.0]) == pytest.approx(1.0 / (1.0 + 5.0 ** 0.5))


def test_verbalize_and_vectors(monument):
    sentences = dict(mcsreason.sentences(monument))
    assert sentences["a1"] == "Monument is a artifactual feature type"
    bio = load("bioportal.ofn")
    assert len(mcsreason.triples(bio)) == 3
    lines = mcsreason.hash_vectors(monument, dim=16, seed=3).splitlines()
    assert len(lines) == 4
    rec = json.loads(lines[0])
    assert rec["id"] == "a1"
    assert len(rec["vector"]) == 16
    imported = mcsreason.score(monument, backend="import", vectors="\n".join(lines) + "\n")
    assert imported == mcsreason.score(monument, seed=3, dim=16)


def test_errors():
    with pytest.raises(mcsreason.Error) as e:
        mcsreason.parse("SubClassOf(A\n")
    assert mcsreason.error_code(e.value) == "SyntaxError"


def test_inject_and_report():
    onto = load("hashead.ofn")
    injected = mcsreason.inject(onto, 1, seed=2)
    assert len(injected) == len(onto) + 1
    new = injected.ids[-1]
    assert injected.is_injected(new)
    assert not mcsreason.check(injected)["consistent"]
    assert mcsreason.classify("rejected", "accepted") == "CIA"
    assert mcsreason.classify("undetermined", "accepted") == "CA"
    r = mcsreason.report(71, 12, 5, 4)
    assert r["total"] == 92
    assert round(r["ia_rate"] * 100, 2) == 77.17
    assert round(r["icr_rate"] * 100, 2) == 95.65
