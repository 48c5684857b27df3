import os
import pathlib

import pytest

import reslat

DATA = pathlib.Path(os.environ.get("RESLAT_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture(scope="module")
def a6():
    return reslat.load_lattice(str(DATA / "a6.json")).lattice


@pytest.fixture(scope="module")
def a8():
    return reslat.load_lattice(str(DATA / "a8.json")).lattice


def test_operations(a6):
    assert a6.size == 6
    assert a6.labels == ["0", "a", "b", "c", "d", "1"]
    assert a6.bottom == "0" and a6.top == "1"
    assert a6.imp("b", "c") == "c"
    assert a6.join("a", "c") == "d"
    assert a6.leq("a", "b")
    with pytest.raises(ValueError):
        a6.odot("a", "z")


def test_filters_and_spectrum(a6, a8):
    assert reslat.filters(a8) == [["1"], ["a", "c", "d", "e", "f", "1"], ["c", "e", "1"], ["f", "1"],
                                  ["0", "a", "b", "c", "d", "e", "f", "1"]]
    s = reslat.spectrum(a8)
    assert s["minimal"] == [["c", "e", "1"], ["f", "1"]]
    assert reslat.spectrum(a6)["maximal"] == [["a", "b", "d", "1"], ["c", "d", "1"]]
    assert reslat.coannihilator(a8, ["f"]) == ["c", "e", "1"]
    assert reslat.sigma(a8, ["f", "1"]) == ["1"]


def test_mp(a6, a8):
    r6 = reslat.mp_check(a6)
    assert r6["agree"] and r6["final"] is True
    r8 = reslat.mp_check(a8)
    assert r8["agree"] and r8["final"] is False
    assert len(r8["verdicts"]) == 32


def test_enumerate_and_oracle():
    assert [len(reslat.enumerate(n)) for n in range(1, 6)] == [1, 1, 2, 7, 26]
    fast = {reslat.canonical_key(l) for l in reslat.enumerate(4)}
    slow = {reslat.canonical_key(l) for l in reslat.naive_oracle(4)}
    assert fast == slow
    rows = reslat.census(4)
    assert [r["mp"] for r in rows] == [1, 1, 2, 7]


def test_round_trip_and_errors(a8):
    text = a8.serialize("A8")
    assert text == (DATA / "a8.json").read_text()
    doc = reslat.parse_lattice(text)
    assert doc.name == "A8"
    with pytest.raises(reslat.SchemaError):
        reslat.parse_lattice('{"size": 1}')
    with pytest.raises(ValueError):
        reslat.enumerate(9)
