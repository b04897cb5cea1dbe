"""Random search for counterexamples to real-rootedness and interlacing of
the three Chow polynomials of simplicial posets.

Instance ``i`` of a run with seed ``s`` uses seed ``s + i``.  With
``num_facets="random"`` the facet count is ``1 + r % C(m, rank)`` where ``r``
is the first output of SplitMix64 seeded with ``seed ^ 0xF00D``.  Facets are
then drawn by :func:`chowkit.poset.sample_facets` with the instance seed.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import comb
from typing import IO, Iterable, Iterator

from .chow import analyze
from .poset import SplitMix64, face_poset, sample_facets

__all__ = ["FuzzRecord", "resolve_facet_count", "run_instance", "run_fuzz", "replay_record",
           "FACET_SALT"]

FACET_SALT = 0xF00D


@dataclass(frozen=True)
class FuzzRecord:
    seed: int
    generator_params: tuple[int, int, int]
    facets: list[list[int]]
    h_vector: list[int]
    h_positive: bool
    chow: str
    chow_dual: str
    aug: str
    real_rooted_verdicts: tuple[bool, bool, bool]
    interlace_dual_aug: bool
    interlace_chow_aug: bool
    runtime_ms: int

    @property
    def violation(self) -> bool:
        return not (all(self.real_rooted_verdicts) and self.interlace_dual_aug and self.interlace_chow_aug)

    def to_json(self) -> str:
        doc = asdict(self)
        doc["generator_params"] = list(self.generator_params)
        doc["real_rooted_verdicts"] = list(self.real_rooted_verdicts)
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> FuzzRecord:
        doc = json.loads(line)
        doc["generator_params"] = tuple(doc["generator_params"])
        doc["real_rooted_verdicts"] = tuple(doc["real_rooted_verdicts"])
        return cls(**doc)

    def comparable(self) -> dict:
        doc = json.loads(self.to_json())
        doc.pop("runtime_ms")
        return doc


def resolve_facet_count(num_vertices: int, rank: int, facets: int | str, seed: int) -> int:
    if facets == "random":
        return 1 + SplitMix64(seed ^ FACET_SALT).next() % comb(num_vertices, rank)
    return int(facets)


def run_instance(num_vertices: int, rank: int, num_facets: int, seed: int) -> FuzzRecord:
    start = time.perf_counter()
    facets = sample_facets(num_vertices, rank, num_facets, seed)
    res = analyze(face_poset(facets))
    ms = int((time.perf_counter() - start) * 1000)
    return FuzzRecord(
        seed=seed,
        generator_params=(num_vertices, rank, num_facets),
        facets=[list(f) for f in facets],
        h_vector=list(res.h_vector),
        h_positive=res.h_positive,
        chow=res.chow.to_text(),
        chow_dual=res.chow_dual.to_text(),
        aug=res.aug.to_text(),
        real_rooted_verdicts=(res.real_rooted["chow"], res.real_rooted["chow_dual"], res.real_rooted["aug"]),
        interlace_dual_aug=res.interlace_dual_aug,
        interlace_chow_aug=res.interlace_chow_aug,
        runtime_ms=ms,
    )


def _run_args(args: tuple[int, int, int, int]) -> FuzzRecord:
    return run_instance(*args)


def instance_params(num_vertices: int, rank: int, facets: int | str, count: int,
                    seed: int) -> list[tuple[int, int, int, int]]:
    out = []
    for i in range(count):
        s = seed + i
        out.append((num_vertices, rank, resolve_facet_count(num_vertices, rank, facets, s), s))
    return out


def run_fuzz(num_vertices: int, rank: int, facets: int | str, count: int, seed: int,
             jobs: int = 1) -> Iterator[FuzzRecord]:
    """Yield records in instance order; with ``jobs > 1`` instances are computed
    by a process pool but still yielded in order, so a single writer keeps the
    log deterministic."""
    params = instance_params(num_vertices, rank, facets, count, seed)
    if jobs <= 1:
        for args in params:
            yield _run_args(args)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_args, params, chunksize=8)


def write_records(records: Iterable[FuzzRecord], out: IO[str]) -> dict:
    summary = {"instances": 0, "h_positive": 0, "violations": 0, "violating_seeds": []}
    for rec in records:
        out.write(rec.to_json() + "\n")
        out.flush()
        summary["instances"] += 1
        summary["h_positive"] += rec.h_positive
        if rec.violation:
            summary["violations"] += 1
            summary["violating_seeds"].append(rec.seed)
    return summary


def replay_record(rec: FuzzRecord) -> list[str]:
    """Recompute a record from its seed and parameters; list the fields that differ."""
    m, r, f = rec.generator_params
    fresh = run_instance(m, r, f, rec.seed)
    want, got = rec.comparable(), fresh.comparable()
    return [f"{k}: logged {want[k]!r}, recomputed {got[k]!r}" for k in sorted(want) if want[k] != got[k]]
