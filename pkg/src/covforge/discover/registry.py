"""Generator records and the persisted registry file.

File layout (UTF-8 text)::

    # covforge registry
    # format: 1
    # d: 7
    # tool: covforge 0.1.0
    # record fields: name degree order construction core printed_order notes certificate audit
    {"kind": "record", "name": "t", ...}
    {"kind": "degree", "degree": 1, "status": "complete"}

``core`` is the canonical text of the generator's restriction to x1 = 0,
which determines the semi-invariant (see :mod:`covforge.sl2`); the opaque
entry has ``core: null``.  ``audit`` is a SHA-256 over the identifying
fields, re-checked by ``covforge audit``.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .. import __version__
from ..poly import parse as parse_poly
from ..poly import to_text
from ..sl2 import SemiInvariant, context

FORMAT_VERSION = 1
HEADER = "# covforge registry"


class RegistryError(ValueError):
    pass


class RegistryGap(RegistryError):
    """A degree below the requested one is not complete."""


def audit_hash(d: int, name: str, degree: int, order: int, construction, core_text) -> str:
    payload = "\n".join([str(d), name, str(degree), str(order), str(construction), str(core_text)])
    return hashlib.sha256(payload.encode()).hexdigest()


@dataclass
class GeneratorRecord:
    name: str
    degree: int
    order: int
    construction: str | None
    semi: SemiInvariant | None
    printed_order: int | None = None
    notes: list = field(default_factory=list)
    certificate: dict = field(default_factory=dict)
    audit: str = ""

    @property
    def poly(self) -> SemiInvariant | None:
        return self.semi

    @property
    def opaque(self) -> bool:
        return self.semi is None

    @property
    def cell(self) -> tuple[int, int]:
        return (self.degree, self.order)

    def core_text(self) -> str | None:
        return None if self.semi is None else to_text(self.semi.core)

    def seal(self, d: int) -> "GeneratorRecord":
        self.audit = audit_hash(d, self.name, self.degree, self.order, self.construction, self.core_text())
        return self

    def to_json(self) -> dict:
        return {
            "kind": "record",
            "name": self.name,
            "degree": self.degree,
            "order": self.order,
            "construction": self.construction,
            "core": self.core_text(),
            "printed_order": self.printed_order,
            "notes": list(self.notes),
            "certificate": dict(self.certificate),
            "audit": self.audit,
        }

    @classmethod
    def from_json(cls, d: int, obj: dict) -> "GeneratorRecord":
        semi = None
        if obj.get("core") is not None:
            ctx = context(d)
            core = parse_poly(obj["core"], ctx.R)
            semi = SemiInvariant(ctx, core, obj["degree"], obj["order"], normalize=False)
        return cls(
            name=obj["name"],
            degree=obj["degree"],
            order=obj["order"],
            construction=obj.get("construction"),
            semi=semi,
            printed_order=obj.get("printed_order"),
            notes=list(obj.get("notes", [])),
            certificate=dict(obj.get("certificate", {})),
            audit=obj.get("audit", ""),
        )


class Registry:
    """Ordered generator records for one form degree, with per-degree status."""

    def __init__(self, d: int):
        self.d = d
        self.ctx = context(d)
        self.records: list[GeneratorRecord] = []
        self.status: dict[int, str] = {}
        self._names: dict[str, GeneratorRecord] = {}

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __contains__(self, name: str) -> bool:
        return name in self._names

    def __getitem__(self, name: str) -> GeneratorRecord:
        return self._names[name]

    def generators(self) -> list[GeneratorRecord]:
        return list(self.records)

    def add(self, record: GeneratorRecord) -> GeneratorRecord:
        if record.name in self._names:
            raise RegistryError(f"duplicate generator name {record.name!r}")
        if not record.audit:
            record.seal(self.d)
        self.records.append(record)
        self._names[record.name] = record
        return record

    def env(self) -> dict[str, SemiInvariant]:
        """Name -> semi-invariant for construction evaluation."""
        return {r.name: r.semi for r in self.records if r.semi is not None}

    def at(self, i: int, j: int | None = None) -> list[GeneratorRecord]:
        return [r for r in self.records if r.degree == i and (j is None or r.order == j)]

    def mark(self, degree: int, status: str) -> None:
        if status not in ("complete", "partial"):
            raise RegistryError(f"bad status {status!r}")
        self.status[degree] = status

    def complete_through(self) -> int:
        k = 0
        while self.status.get(k + 1) == "complete":
            k += 1
        return k

    def require_complete_below(self, i: int) -> None:
        for k in range(1, i):
            if self.status.get(k) != "complete":
                raise RegistryGap(f"registry for d={self.d} is not complete at degree {k} (needed below {i})")

    def distribution(self) -> dict[tuple[int, int], int]:
        out: dict = {}
        for r in self.records:
            out[r.cell] = out.get(r.cell, 0) + 1
        return out

    def truncated(self, max_degree: int) -> "Registry":
        out = Registry(self.d)
        for r in self.records:
            if r.degree <= max_degree:
                out.add(r)
        for k, s in self.status.items():
            if k <= max_degree:
                out.status[k] = s
        return out

    # persistence ---------------------------------------------------------------
    def dumps(self) -> str:
        lines = [
            HEADER,
            f"# format: {FORMAT_VERSION}",
            f"# d: {self.d}",
            f"# tool: covforge {__version__}",
            "# record fields: name degree order construction core printed_order notes certificate audit",
        ]
        for r in self.records:
            lines.append(json.dumps(r.to_json(), sort_keys=True))
        for k in sorted(self.status):
            lines.append(json.dumps({"kind": "degree", "degree": k, "status": self.status[k]}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def save(self, path) -> None:
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(self.dumps())
        os.replace(tmp, path)

    @classmethod
    def loads(cls, text: str) -> "Registry":
        lines = text.splitlines()
        if not lines or lines[0].strip() != HEADER:
            raise RegistryError("not a covforge registry file")
        meta = {}
        body = []
        for line in lines[1:]:
            if line.startswith("#"):
                key, _, val = line[1:].partition(":")
                meta[key.strip()] = val.strip()
            elif line.strip():
                body.append(line)
        try:
            version = int(meta.get("format", ""))
        except ValueError:
            raise RegistryError("registry header lacks a format version") from None
        if version != FORMAT_VERSION:
            raise RegistryError(f"registry format {version} is not supported (expected {FORMAT_VERSION})")
        if "d" not in meta:
            raise RegistryError("registry header lacks d")
        reg = cls(int(meta["d"]))
        for line in body:
            obj = json.loads(line)
            kind = obj.get("kind")
            if kind == "record":
                reg.add(GeneratorRecord.from_json(reg.d, obj))
            elif kind == "degree":
                reg.mark(obj["degree"], obj["status"])
            else:
                raise RegistryError(f"unknown entry kind {kind!r}")
        return reg

    @classmethod
    def load(cls, path) -> "Registry":
        return cls.loads(Path(path).read_text())
