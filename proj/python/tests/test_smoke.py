import os

import pytest

import orbitkit

DATA = os.environ["ORBITKIT_DATA_DIR"]


def data(name):
    return os.path.join(DATA, name)


def test_parse_and_validate():
    s = orbitkit.load(data("heisenberg.spec"))
    assert s.valid
    v = s.validation()
    assert v["nilpotency_class"] == 2
    assert v["derived_dim"] == 1


def test_parse_error():
    with pytest.raises(orbitkit.SpecParseError):
        orbitkit.parse("dim 2\nbasis X1 X2\ndilation 1 q\n")


def test_orbit_goldens():
    s = orbitkit.load(data("upper4.spec"))
    o = s.orbit()
    assert o["e"] == [2, 3, 4, 6]
    assert o["j"] == [4, 6]
    assert o["d"] == 2
    assert o["lambda_free"] == [1, 5]

    g = orbitkit.load(data("gl10.spec")).orbit()
    assert g["e"] == [4, 5, 6, 7, 8, 9]
    assert g["d"] == 3


def test_dilation_flags():
    d = orbitkit.load(data("heis_expansive.spec")).dilation()
    assert d["is_automorphism"]
    assert d["is_expansive"]
    assert d["det_modulus"] == "16"


def test_classification():
    c = orbitkit.load(data("heisenberg.spec")).classify()
    assert c["case"] == "NontrivialAction"
    assert c["multiplicity"] == "CountablyInfinite"
    assert c["irreducibility"] == "ReducibleLikely"
    assert c["tiling"]["pivot"] == 1

    c2 = orbitkit.load(data("heis_trivial.spec")).classify()
    assert c2["case"] == "TrivialActionNoncommutative"
    assert c2["irreducibility"] == "Irreducible"
    assert c2["tiling"] is None

    c3 = orbitkit.load(data("free2step.spec")).classify()
    assert c3["irreducibility"] == "Irreducible"


def test_tiling_and_determinism():
    s = orbitkit.load(data("heisenberg.spec"))
    t1 = s.tiling(samples=500, seed=3)
    t2 = s.tiling(samples=500, seed=3)
    assert t1 == t2
    assert t1["failures"] == 0


def test_verify_identities():
    r = orbitkit.load(data("heis_expansive.spec")).verify_identities(samples=20, seed=1)
    assert max(abs(v) for v in r["intertwining"].values()) < 1e-9
    assert r["group_law"] < 1e-9
    assert r["dilation_unitarity"] < 1e-3


def test_canonical_roundtrip():
    s = orbitkit.load(data("fivedim.spec"))
    canon = s.canonical()
    assert orbitkit.parse(canon).canonical() == canon
