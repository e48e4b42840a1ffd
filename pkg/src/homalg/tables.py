"""Bigraded dimension tables ``(homological index i, weight d) -> dim``."""

from __future__ import annotations

import csv
import io
import json


class HomologyTable:
    """Dimensions of homology groups indexed by homological degree and weight.

    ``side`` is ``"poisson"`` or ``"hochschild"``.  Entries not present are
    treated as missing (not as zero) so that :func:`homalg.series.compare`
    can tell an unpopulated cell from a vanishing one.
    """

    def __init__(self, side, max_index=4, dims=None):
        self.side = side
        self.max_index = max_index
        self.dims = {}
        for (i, d), v in (dims or {}).items():
            self[i, d] = v

    def __setitem__(self, key, value):
        i, d = key
        if not 0 <= i <= self.max_index:
            raise KeyError(f"homological index {i} outside 0..{self.max_index}")
        if value < 0:
            raise ValueError("dimensions are nonnegative")
        self.dims[int(i), int(d)] = int(value)

    def __getitem__(self, key):
        return self.dims[key]

    def get(self, key, default=None):
        return self.dims.get(key, default)

    def __contains__(self, key):
        return key in self.dims

    def __len__(self):
        return len(self.dims)

    def __eq__(self, other):
        return isinstance(other, HomologyTable) and self.dims == other.dims

    @property
    def max_weight(self):
        return max((d for _, d in self.dims), default=-1)

    def row(self, i, upto=None):
        upto = self.max_weight if upto is None else upto
        return [self.dims.get((i, d)) for d in range(upto + 1)]

    def records(self, side=False):
        out = []
        for (i, d) in sorted(self.dims):
            rec = {"i": i, "d": d, "dim": self.dims[i, d]}
            if side:
                rec = {"side": self.side, **rec}
            out.append(rec)
        return out

    def to_json(self, side=None):
        if side is None:
            side = self.side != "poisson"
        return json.dumps(self.records(side=side))

    def to_csv(self, side=False):
        buf = io.StringIO()
        fields = (["side"] if side else []) + ["i", "d", "dim"]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(self.records(side=side))
        return buf.getvalue()

    @classmethod
    def from_records(cls, records, side=None):
        records = list(records)
        if side is None:
            side = records[0].get("side", "poisson") if records else "poisson"
        return cls(side, dims={(int(r["i"]), int(r["d"])): int(r["dim"]) for r in records})

    @classmethod
    def from_json(cls, text, side=None):
        return cls.from_records(json.loads(text), side=side)

    @classmethod
    def from_csv(cls, text, side=None):
        return cls.from_records(csv.DictReader(io.StringIO(text)), side=side)

    def format(self):
        w = self.max_weight
        lines = [f"{self.side} homology dimensions", "i\\d " + " ".join(f"{d:>4}" for d in range(w + 1))]
        for i in range(self.max_index + 1):
            cells = ["   ." if v is None else f"{v:>4}" for v in self.row(i, w)]
            lines.append(f"{i:>3} " + " ".join(cells))
        return "\n".join(lines)

    def __repr__(self):
        return f"HomologyTable(side={self.side!r}, cells={len(self.dims)})"


def WeightTable(dims=None):
    return HomologyTable("poisson", dims=dims)


def HHTable(dims=None):
    return HomologyTable("hochschild", dims=dims)
