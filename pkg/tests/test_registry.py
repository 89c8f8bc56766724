from __future__ import annotations

import json

import pytest

from covforge.discover import GeneratorRecord, Registry, RegistryError
from covforge.discover.registry import FORMAT_VERSION, audit_hash


def test_round_trip_is_exact(replayed, tmp_path):
    reg = replayed[0]
    path = tmp_path / "r.reg"
    reg.save(path)
    again = Registry.load(path)
    assert again.dumps() == reg.dumps()
    assert [r.name for r in again] == [r.name for r in reg]
    for a, b in zip(again, reg):
        assert (a.semi is None) == (b.semi is None)
        if a.semi is not None:
            assert a.semi.core == b.semi.core


def test_header_is_self_describing(replayed):
    text = replayed[0].dumps()
    lines = text.splitlines()
    assert lines[0] == "# covforge registry"
    assert f"# format: {FORMAT_VERSION}" in lines
    assert "# d: 7" in lines
    assert any(line.startswith("# tool: covforge") for line in lines)
    rec = json.loads(next(line for line in lines if line.startswith("{")))
    assert set(rec) >= {"name", "degree", "order", "construction", "core", "audit"}


def test_opaque_record(replayed):
    trd = replayed[0]["trd"]
    assert trd.opaque and trd.cell == (30, 0) and trd.construction is None


def test_version_mismatch_is_rejected(replayed):
    text = replayed[0].truncated(3).dumps().replace(f"# format: {FORMAT_VERSION}", "# format: 99")
    with pytest.raises(RegistryError):
        Registry.loads(text)
    with pytest.raises(RegistryError):
        Registry.loads("hello\n")


def test_audit_hash_depends_on_every_field():
    base = audit_hash(7, "a", 2, 6, "[t,t]^4", "x")
    assert base != audit_hash(7, "a", 2, 6, "[t,t]^4", "y")
    assert base != audit_hash(7, "a", 2, 4, "[t,t]^4", "x")
    assert base != audit_hash(5, "a", 2, 6, "[t,t]^4", "x")


def test_duplicate_names_rejected(ctx7):
    from covforge.sl2 import SemiInvariant

    reg = Registry(7)
    t = SemiInvariant.base(ctx7)
    reg.add(GeneratorRecord("t", 1, 7, "t", t))
    with pytest.raises(RegistryError):
        reg.add(GeneratorRecord("t", 1, 7, "t", t))


def test_status_and_truncation(replayed):
    reg = replayed[0]
    assert reg.complete_through() == 30
    small = reg.truncated(5)
    assert small.complete_through() == 5 and max(r.degree for r in small) == 5
