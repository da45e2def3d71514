import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.config import Settings, settings, validate_config
from app.errors import ParseError
from app.utils.helpers import chunk_range, parallel_map, parse_range


def test_parse_range():
    assert parse_range("2..12") == (2, 12)
    assert parse_range(" 5 .. 5 ") == (5, 5)
    for bad in ("12..2", "2-12", "", "a..b"):
        with pytest.raises(ParseError):
            parse_range(bad)


@given(st.integers(min_value=0, max_value=500), st.integers(min_value=1, max_value=32))
def test_chunks_cover_every_index_in_order(size, parts):
    blocks = chunk_range(size, parts)
    assert len(blocks) <= max(parts, 1)
    assert [i for b in blocks for i in b] == list(range(size))


def test_parallel_map_keeps_order():
    items = list(range(50))
    assert parallel_map(lambda x: x * x, items, threads=8) == [x * x for x in items]
    assert parallel_map(str, [], threads=4) == []


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("IDEALLAB_MONLOC_DEGREE_BOUND", "6")
    monkeypatch.setenv("IDEALLAB_THREADS", "3")
    fresh = Settings()
    assert fresh.MONLOC_DEGREE_BOUND == 6
    assert fresh.THREADS == 3


def test_validate_config(monkeypatch):
    assert validate_config()
    monkeypatch.setattr(settings, "THREADS", 0)
    assert not validate_config()
