from lmp.constructions import corpus
from lmp.core import certify_preservation
from lmp.core.io import dumps, loads


def test_corpus_is_deterministic_and_certified():
    a, b = corpus(60, 5), corpus(60, 5)
    assert [e.name for e in a] == [e.name for e in b]
    assert all(x.map == y.map for x, y in zip(a, b))
    assert len({e.name for e in a}) == 60
    for e in a:
        assert certify_preservation(e.map).passed, e.name
        assert loads(dumps(e.map)) == e.map


def test_corpus_contains_monotone_members():
    names = {e.name: e.map for e in corpus(10)}
    assert names["identity"].is_monotone() and names["reflection"].is_monotone()
    assert names["tent"].lap_count() == 2
