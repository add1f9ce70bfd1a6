import os
from pathlib import Path

import pytest

import fobnn_sat

DATA = Path(os.environ.get("FOBNN_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


def renz(**kw):
    return fobnn_sat.load(str(DATA / "renz.rn"), **kw)


def test_fixed_point_under_mass_action():
    assert "S=+,E=+,C=+,P=+" in renz(mass_action="all").fixed_points()


def test_transitions_from_state():
    ts = renz(mass_action="all").transitions(start="S=+,E=+,C=+,P=+")
    assert ts == [("S=+,E=+,C=+,P=+", "S=+,E=+,C=+,P=+")]
    assert len(renz().transitions(limit=2)) == 2


def test_graphs_and_density():
    g = fobnn_sat.stg(renz(mass_action="all"))
    assert g["kind"] == "fobnn-base"
    assert len(g["nodes"]) == 16
    assert fobnn_sat.density(g) == fobnn_sat.density(g)
    assert 0 < fobnn_sat.density(g) <= 1
    c = fobnn_sat.classic_stg(renz())
    assert len(c["nodes"]) == 16


def test_backends_agree():
    backends = fobnn_sat.available_backends()
    assert set(backends) == {"picosat", "cdcl"}
    graphs = [fobnn_sat.stg(renz(backend=b))["edges"] for b in backends]
    assert graphs[0] == graphs[1]


def test_sbml_matches_native():
    xml = fobnn_sat.load(str(DATA / "renz.xml"))
    assert xml.render() == renz().render()


def test_dimacs_header():
    text = renz().dimacs()
    assert text.startswith("c map S 1 2\n")
    assert "\np cnf " in text


def test_errors():
    with pytest.raises(fobnn_sat.InputError):
        fobnn_sat.parse("species: A\nr: A => B @ A\n")
    with pytest.raises(ValueError):
        renz(constraints="S' >")
    big = "species: " + ", ".join(f"X{i}" for i in range(13)) + "\n"
    with pytest.raises(fobnn_sat.GuardError):
        fobnn_sat.stg(fobnn_sat.parse(big))
