import pytest

import ordertop

SIERPINSKI = {"kind": "topology", "n": 2, "opens": [[], [1], [0, 1]]}


def test_version():
    assert ordertop.__version__ == "0.3.0"


def test_encode_and_kind():
    assert ordertop.kind_of(SIERPINSKI) == "topology"
    assert ordertop.encode(SIERPINSKI) == ordertop.encode(ordertop.encode(SIERPINSKI))


def test_check():
    assert ordertop.check("t0", SIERPINSKI)
    assert not ordertop.check("t1", SIERPINSKI)


def test_derive_specialization_round():
    rel = ordertop.derive("interior-relation", SIERPINSKI)
    assert rel["kind"] == "relation"
    lawson = ordertop.derive("lawson", {"kind": "qoset", "n": 2, "leq": [[1, 1], [0, 1]]})
    assert len(lawson["opens"]) == 4


def test_invariants_keys():
    inv = ordertop.invariants(SIERPINSKI)
    assert isinstance(inv, dict) and inv


def test_registry():
    tags = ordertop.predicate_tags()
    assert tags == sorted(tags)
    assert "up-stable" in tags
    assert len(ordertop.suite_ids()) == 14


def test_run_suite():
    r = ordertop.run_suite("thm-3.3-roundtrip", 3)
    assert r["failed"] == 0 and r["instances"] == 29
    faulted = ordertop.run_suite("thm-3.3-roundtrip", 3, fault="dual-specialization")
    assert faulted["failed"] > 0
    first = faulted["counterexamples"][0]
    replay = ordertop.evaluate_instance("thm-3.3-roundtrip", first["instance"], "dual-specialization")
    assert replay["status"] == "fail"


def test_seeded_runs_ignore_workers():
    a = ordertop.run_suite("prop-9.1", 4, seed=7, samples=50, workers=1)
    b = ordertop.run_suite("prop-9.1", 4, seed=7, samples=50, workers=4)
    assert a["determinism_hash"] == b["determinism_hash"]


def test_hunt():
    found = ordertop.hunt("up-stable", n=3)
    assert found["status"] == "counterexample"
    assert not ordertop.check("up-stable", found["instance"])
    exhausted = ordertop.hunt("compact", kind="topology", n=3)
    assert exhausted["status"] == "exhausted"


def test_fixtures():
    names = ordertop.fixture_names()
    assert "sierpinski" in names and "m3" in names
    assert ordertop.fixture("m3")["object"]["kind"] == "lattice"


def test_errors_carry_code_and_witness():
    bad = {"kind": "topology", "n": 3, "opens": [[], [0], [1], [0, 1, 2]]}
    with pytest.raises(ordertop.OrdertopError) as e:
        ordertop.check("t0", bad)
    assert e.value.code == "NotUnionClosed"
    assert e.value.witness == [1, 2]
    with pytest.raises(ordertop.OrdertopError) as e:
        ordertop.run_suite("nope", 3)
    assert e.value.code == "UnknownSuite"
