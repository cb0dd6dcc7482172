"""Grid benchmark of the colouring pipeline with CSV and JSON reports."""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Union

from . import graph as gr
from .colouring import verify
from .pipeline import DEFAULT_DIVISIBLE_BUDGET, colour_graph, theorem_bound

CSV_HEADER = ["family", "n", "k", "seed", "colours_used", "palette_bound",
              "theorem_bound", "maximality", "millis"]

SEEDED = {"gnp"}


@dataclass
class BenchConfig:
    """Grid definition. ``sizes`` may contain ``"k"`` meaning n = k.

    ``n`` is the family parameter: vertices for gnp/complete/cycle/path,
    leaves for star, part size b in tripartite(1, b, b).
    """

    families: List[str] = field(default_factory=list)
    sizes: List[Union[int, str]] = field(default_factory=list)
    k: List[int] = field(default_factory=list)
    seeds: List[int] = field(default_factory=lambda: [0])
    p: List[float] = field(default_factory=lambda: [0.3])
    budget: int = DEFAULT_DIVISIBLE_BUDGET
    jobs: int = 1

    @classmethod
    def from_dict(cls, data: dict) -> "BenchConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown bench config keys: {sorted(unknown)}")
        return cls(**data)


def _build(family: str, n: int, p: Optional[float], seed: Optional[int]) -> gr.Graph:
    if family == "gnp":
        return gr.gnp(n, p, seed)
    if family == "star":
        return gr.star(n)
    if family == "complete":
        return gr.complete(n)
    if family == "cycle":
        return gr.cycle(n)
    if family == "path":
        return gr.path(n)
    if family == "tripartite":
        return gr.complete_tripartite(1, n, n)
    raise ValueError(f"unknown bench family {family!r}")


def tasks(cfg: BenchConfig) -> List[dict]:
    out = []
    for family in cfg.families:
        for p in (cfg.p if family in SEEDED else [None]):
            for size in cfg.sizes:
                for k in cfg.k:
                    n = k if size == "k" else int(size)
                    for seed in (cfg.seeds if family in SEEDED else [None]):
                        out.append({"family": family, "p": p, "n": n, "k": k, "seed": seed,
                                    "budget": cfg.budget})
    return out


def run_task(task: dict) -> dict:
    g = _build(task["family"], task["n"], task["p"], task["seed"])
    start = time.perf_counter()
    colouring, cert = colour_graph(g, task["k"], task["budget"])
    millis = (time.perf_counter() - start) * 1000.0
    violations = len(verify(g, colouring, task["k"]))
    family = task["family"] if task["p"] is None else f"{task['family']}:{task['p']}"
    return {
        "family": family,
        "n": task["n"],
        "k": task["k"],
        "seed": task["seed"],
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "colours_used": cert.colours_used,
        "palette_bound": cert.palette_bound,
        "theorem_bound": theorem_bound(task["k"]),
        "maximality": cert.maximality,
        "measured_degeneracy": cert.measured_degeneracy,
        "violations": violations,
        "millis": round(millis, 3),
    }


def run_bench(cfg: BenchConfig) -> List[dict]:
    """One row per grid point, in config order."""
    work = tasks(cfg)
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(run_task, work))
    return [run_task(t) for t in work]


def rows_to_csv(rows: List[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({**row, "seed": "" if row["seed"] is None else row["seed"]})
    return buf.getvalue()


def rows_to_json(rows: List[dict], cfg: BenchConfig) -> str:
    """Deterministic report: wall-clock timings are left out (they live in the CSV)."""
    stable = [{key: val for key, val in row.items() if key != "millis"} for row in rows]
    cfg_dict = asdict(cfg)
    cfg_dict.pop("jobs")
    return json.dumps({"config": cfg_dict, "rows": stable}, indent=2) + "\n"
