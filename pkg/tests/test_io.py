import pytest
from hypothesis import given

from conftest import pa_maps
from lmp.core import PAMap
from lmp.core.io import MapFormatError, dumps, load, loads, save


def test_tent_fixture_is_canonical(fixtures):
    text = (fixtures / "tent.json").read_text()
    assert dumps(PAMap.tent()) == text
    assert loads(text) == PAMap.tent()


@given(pa_maps())
def test_roundtrip(f):
    text = dumps(f)
    assert loads(text) == f
    assert dumps(loads(text)) == text


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"schema": "pam-v0", "breakpoints": []}',
        '{"schema": "pam-v1", "breakpoints": [{"x": "0", "y": "0"}]}',
        '{"schema": "pam-v1", "breakpoints": [{"x": "0", "y": "0"}, {"x": "1", "y": "0.5"}]}',
        '{"schema": "pam-v1", "breakpoints": [{"x": "0", "y": "0"}, {"x": "1", "y": "2"}]}',
    ],
)
def test_rejects_bad_documents(text):
    with pytest.raises(MapFormatError):
        loads(text)


def test_save_is_atomic_and_loadable(tmp_path):
    path = tmp_path / "sub" / "m.json"
    save(PAMap.tent(), path)
    assert load(path) == PAMap.tent()
    assert [p.name for p in path.parent.iterdir()] == ["m.json"]
