from pathlib import Path

import pytest

import slab

FIXTURES = Path(__file__).resolve().parents[2] / "tests" / "fixtures"

DOC = """\
space W = conv
space N = disc
map inc : N -> W
  0: tail every 1 from 0 in 0
end
hom h = dual inc
contact S = atoms 3 bound {0,1,2}
"""


def test_normalize_is_stable():
    once = slab.normalize(DOC)
    assert slab.normalize(once) == once
    assert slab.names(DOC) == ["W", "N", "inc", "h", "S"]


def test_parse_errors_have_locations():
    with pytest.raises(slab.ParseError) as info:
        slab.normalize("space W = conv\nmap f : W -> W\n  0: tail every from 0 in 0\nend\n")
    assert info.value.line == 3
    assert info.value.column > 0
    assert isinstance(info.value, ValueError)


def test_verify_inclusion():
    r = slab.verify(DOC, "all", "inc")
    assert r.ok
    (case,) = r.cases
    ids = {v.theorem for v in case.verdicts}
    assert ids == set(slab.theorem_ids())
    dense = next(v for v in case.verdicts if v.theorem == "dense-embedding")
    assert dense.geo and dense.alg and dense.agree


def test_unknown_names():
    with pytest.raises(ValueError):
        slab.verify(DOC, "no-such-theorem", "inc")
    with pytest.raises(ValueError):
        slab.check(DOC, "missing")


def test_fuzz_round_trip_and_determinism():
    a = slab.fuzz(seed=7, count=20)
    b = slab.fuzz(seed=7, count=20)
    assert a.machine() == b.machine()
    assert a.ok
    assert slab.parse_report(a.machine()) == a
    for case in a.cases:
        slab.normalize(a.dsl_text(case))


def test_bad_report_is_rejected():
    with pytest.raises(ValueError):
        slab.parse_report("slab-report 1\nsummary cases 3 disagreements 0\n")


def test_contact_sweep():
    r = slab.contact_sweep(n_max=3, lemma_n_max=3)
    assert r.ok
    assert all(t.failures == 0 for t in r.tallies)
    with pytest.raises(ValueError):
        slab.contact_sweep(n_max=9)


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.slab")), ids=lambda p: p.stem)
def test_fixture_golden(path):
    r = slab.verify(path.read_text(), "all", "f")
    assert r.machine() == path.with_suffix(".report").read_text()
