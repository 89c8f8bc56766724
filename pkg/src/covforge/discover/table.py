"""Distribution of generators over (degree, order) cells."""

from __future__ import annotations


class DistributionTable:
    """Counts of generators per cell; only nonzero cells are stored."""

    def __init__(self, d: int, counts: dict | None = None):
        self.d = d
        self.counts: dict[tuple[int, int], int] = {}
        for cell, n in (counts or {}).items():
            self[cell] = n

    @classmethod
    def from_registry(cls, registry, max_degree: int | None = None) -> "DistributionTable":
        out = cls(registry.d)
        for rec in registry.records:
            if max_degree is None or rec.degree <= max_degree:
                out[rec.cell] = out[rec.cell] + 1
        return out

    @classmethod
    def from_rows(cls, d: int, rows: dict) -> "DistributionTable":
        """From ``{degree: {order: count}}``."""
        return cls(d, {(i, j): n for i, row in rows.items() for j, n in row.items()})

    def __getitem__(self, cell) -> int:
        return self.counts.get(tuple(cell), 0)

    def __setitem__(self, cell, n: int) -> None:
        cell = tuple(cell)
        if n:
            self.counts[cell] = n
        else:
            self.counts.pop(cell, None)

    def __eq__(self, other) -> bool:
        return isinstance(other, DistributionTable) and self.d == other.d and self.counts == other.counts

    def cells(self) -> list[tuple[int, int]]:
        return sorted(self.counts)

    def degrees(self) -> list[int]:
        return sorted({i for i, _ in self.counts})

    def total(self) -> int:
        return sum(self.counts.values())

    def degree_total(self, i: int) -> int:
        return sum(n for (a, _), n in self.counts.items() if a == i)

    def truncated(self, max_degree: int) -> "DistributionTable":
        return DistributionTable(self.d, {c: n for c, n in self.counts.items() if c[0] <= max_degree})

    def diff(self, other: "DistributionTable") -> list[tuple[tuple[int, int], int, int]]:
        """Cells where the counts differ, as (cell, self, other)."""
        cells = sorted(set(self.counts) | set(other.counts))
        return [(c, self[c], other[c]) for c in cells if self[c] != other[c]]

    def records(self) -> list[dict]:
        return [{"degree": i, "order": j, "count": n} for (i, j), n in sorted(self.counts.items())]

    def render(self) -> str:
        """Aligned grid: one row per degree, one column per order that occurs."""
        if not self.counts:
            return f"d={self.d}: no generators\n"
        orders = sorted({j for _, j in self.counts})
        width = max(3, max(len(str(n)) for n in self.counts.values()), max(len(str(j)) for j in orders))
        head = "deg\\ord".rjust(7) + " " + " ".join(str(j).rjust(width) for j in orders) + "  total"
        lines = [head]
        for i in self.degrees():
            cells = " ".join((str(self[i, j]) if self[i, j] else ".").rjust(width) for j in orders)
            lines.append(str(i).rjust(7) + " " + cells + f"  {self.degree_total(i):5d}")
        lines.append(f"{'total':>7} {'':{len(head) - 15}}{self.total():7d}")
        return "\n".join(lines) + "\n"
