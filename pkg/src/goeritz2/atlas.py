"""Breadth-first atlas of reducing curves reachable from the standard one.

Images of the standard curve under generator words are deduplicated by
signature; each record keeps the first (hence shortest) witness word, the
realized (a,b,c) triple and the search depth.  The store is line-delimited
JSON with a sidecar index, so reruns can extend it and diffs stay readable.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .action import GENERATORS, apply_generator, format_goeritz_word
from .curve import CurveWord, P_CURVE, canonical_form, from_doc, signature, to_doc
from .errors import MalformedInput, NotReducing
from .handlebody import require_reducing

_GENERATOR_ORDER = ("alpha", "beta", "beta_inv", "gamma", "delta", "delta_inv")
assert set(_GENERATOR_ORDER) == set(GENERATORS)


@dataclass(frozen=True)
class AtlasRecord:
    key: str                       # signature key (dedup handle)
    triple: tuple[int, int, int]
    witness: str                   # compact generator word
    depth: int
    curve_doc: dict

    def as_json(self) -> str:
        return json.dumps(
            {"key": self.key, "triple": list(self.triple), "witness": self.witness,
             "depth": self.depth, "curve": self.curve_doc},
            sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(line: str) -> "AtlasRecord":
        doc = json.loads(line)
        return AtlasRecord(doc["key"], tuple(doc["triple"]), doc["witness"],
                           doc["depth"], doc["curve"])


@dataclass
class AtlasStore:
    records: list[AtlasRecord] = field(default_factory=list)
    index: dict[str, int] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def add(self, rec: AtlasRecord) -> bool:
        if rec.key in self.index:
            return False
        self.index[rec.key] = len(self.records)
        self.records.append(rec)
        return True

    def save(self, path: str) -> None:
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            fh.write(json.dumps({"format": "goeritz-atlas/1", **self.meta},
                                sort_keys=True, separators=(",", ":")) + "\n")
            for rec in self.records:
                fh.write(rec.as_json() + "\n")
        os.replace(tmp, path)
        with open(path + ".idx", "w") as fh:
            for rec in self.records:
                fh.write(f"{rec.key}\t{self.index[rec.key]}\n")

    @staticmethod
    def load(path: str) -> "AtlasStore":
        store = AtlasStore()
        with open(path) as fh:
            header = json.loads(fh.readline())
            if header.get("format") != "goeritz-atlas/1":
                raise MalformedInput("not a goeritz-atlas/1 file")
            store.meta = {k: v for k, v in header.items() if k != "format"}
            for line in fh:
                if line.strip():
                    store.add(AtlasRecord.from_json(line))
        return store

    def export_table(self) -> str:
        """Plain table: triple, number of distinct signatures, shortest witness."""
        by_triple: dict[tuple[int, int, int], list[AtlasRecord]] = {}
        for rec in self.records:
            by_triple.setdefault(rec.triple, []).append(rec)
        lines = ["a b c   signatures   shortest witness"]
        for triple in sorted(by_triple):
            recs = by_triple[triple]
            witness = min(recs, key=lambda r: (r.depth, r.witness)).witness
            lines.append(f"{triple[0]} {triple[1]} {triple[2]}   {len(recs):<12} "
                         f"{witness or '(empty)'}")
        return "\n".join(lines)


def _expand(item: tuple[CurveWord, str]) -> list[tuple[str, CurveWord]]:
    w, witness = item
    out = []
    for gen in _GENERATOR_ORDER:
        img = apply_generator(w, gen)
        require_reducing(img)
        out.append((witness + format_goeritz_word([gen]), img))
    return out


def enumerate_atlas(depth: int, store: AtlasStore | None = None,
                    workers: int = 1) -> AtlasStore:
    """All generator words of length <= depth applied to the standard curve.

    Deterministic for a fixed depth regardless of worker count: the frontier
    is expanded in order and merged serially.
    """
    if depth < 0:
        raise MalformedInput("depth must be nonnegative")
    store = store if store is not None else AtlasStore()
    store.meta.setdefault("generators", "abBgdD")
    store.meta["depth"] = max(depth, store.meta.get("depth", 0))

    base = canonical_form(P_CURVE)
    sig = signature(base)
    store.add(AtlasRecord(sig.key(), sig.triple(), "", 0, to_doc(base)))

    for level in range(1, depth + 1):
        # rebuild the frontier from the store so saved runs can be extended
        frontier = [(record_curve(rec), rec.witness)
                    for rec in store.records if rec.depth == level - 1]
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                expansions = list(pool.map(_expand, frontier))
        else:
            expansions = [_expand(item) for item in frontier]
        for batch in expansions:
            for witness, img in batch:
                s = signature(img)
                triple = s.triple()
                if any(t % 2 for t in triple):
                    raise NotReducing("odd intersection triple in atlas")
                store.add(AtlasRecord(s.key(), triple, witness, level,
                                      to_doc(canonical_form(img))))
    return store


def lambda_triples(store: AtlasStore) -> list[tuple[tuple[int, int, int], int]]:
    """Sorted realized (a,b,c) triples with their signature multiplicities."""
    by_triple: dict[tuple[int, int, int], int] = {}
    for rec in store.records:
        by_triple[rec.triple] = by_triple.get(rec.triple, 0) + 1
    return sorted(by_triple.items())


def is_non_triangular(triple: tuple[int, int, int]) -> bool:
    a, b, c = triple
    return a > b + c or b > c + a or c > a + b


def record_curve(rec: AtlasRecord) -> CurveWord:
    return from_doc(rec.curve_doc)
