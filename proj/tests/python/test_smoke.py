import json
import os
import pathlib

import pytest

import posetext

FIXTURES = pathlib.Path(os.environ.get("POSETEXT_FIXTURES", pathlib.Path(__file__).parents[1] / "fixtures"))


def load(name):
    return json.loads((FIXTURES / f"{name}.json").read_text())


def test_classify_bowtie():
    r = posetext.classify(load("bowtie"))
    assert not r["lattice"]
    assert not r["quasilattice"]
    assert r["local_complete_lattice"]
    assert r["witnesses"]["lattice"]["missing"] == "sup"


def test_classify_chain():
    r = posetext.classify(load("c3"))
    assert r["chain"] and r["lattice"] and r["z_embeddable"]
    assert r["z_embedding"] == {"a": 0, "b": 1, "c": 2}


def test_extend_modes():
    doc = load("c3_c2_map")
    assert posetext.extend(doc, "lower", FIXTURES)["map"] == {"a": "0", "b": "0", "c": "1"}
    assert posetext.extend(doc, "upper", FIXTURES)["map"] == {"a": "0", "b": "1", "c": "1"}
    assert posetext.extend(load("l6_map"), "any", FIXTURES) is None


def test_errors_carry_the_kind():
    with pytest.raises(posetext.PosetError, match="CodomainNotCompleteLattice"):
        posetext.extend(load("bowtie_map"), "lower", FIXTURES)
    with pytest.raises(posetext.PosetError, match="CycleDetected"):
        posetext.classify(load("cycle"))
    with pytest.raises(posetext.PosetError, match="UnknownTheoremId"):
        posetext.verify("t99")


def test_family():
    fam = posetext.enumerate_extensions(load("c3_c2_map"), FIXTURES)
    assert fam["size"] == 2
    assert fam["bottom"] == {"a": "0", "b": "0", "c": "1"}


def test_counts():
    assert [posetext.count_posets(n) for n in range(1, 6)] == [1, 3, 19, 219, 4231]
    assert [posetext.count_posets(n, labeled=False) for n in range(1, 6)] == [1, 2, 5, 16, 63]


def test_generate_round_trip():
    for doc in posetext.generate(3):
        assert posetext.normalise(doc) == doc


def test_verify():
    assert set(posetext.theorem_ids()) >= {"t4", "s43", "t46"}
    r = posetext.verify("s43", max_size=4)
    assert r["pass"] and r["checked"] == 1 + 3 + 19 + 219
