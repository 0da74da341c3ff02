"""Benchmark sweeps: run A1, A2, the oracle and the bounds over instance families."""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator

import numpy as np

from .approx import algo_a1, algo_a2
from .bounds import bounds_report, certified_ratio
from .generators import gen_random, gen_tight
from .instance import Instance
from .oracle import DEFAULT_BUDGET, BudgetExceeded, count_selections, exact_opt

COLUMNS = ("instance_id", "n", "N", "len_a1", "len_a2", "exact", "ub_best",
           "ratio_vs_exact", "certified_ratio", "note")


def random_family(count: int, first_seed: int = 0, n_max: int = 7, k_max: int = 3,
                  dims: Iterable[int] = (2, 3)) -> Iterator[tuple[str, Instance]]:
    dims = tuple(dims)
    for seed in range(first_seed, first_seed + count):
        rng = np.random.default_rng([seed, 0x5EED])
        n = int(rng.integers(2, n_max + 1))
        dim = dims[seed % len(dims)]
        yield f"random-s{seed}-n{n}-d{dim}", gen_random(n, k_max, dim, seed)


def tight_family(ns: Iterable[int], eps: float | None = None) -> Iterator[tuple[str, Instance]]:
    for n in ns:
        e = eps if eps is not None else 1.0 / (n - 1)
        yield f"tight-n{n}", gen_tight(n, e)


def run_instance(item: tuple[str, Instance], budget: int = DEFAULT_BUDGET) -> dict:
    name, inst = item
    row = dict.fromkeys(COLUMNS)
    row.update(instance_id=name, n=inst.n, N=inst.N, note="")
    try:
        a1 = algo_a1(inst)
        a2 = algo_a2(inst, budget)
        rep = bounds_report(inst)
        row.update(len_a1=a1.length, len_a2=a2.length, ub_best=rep.ub_best,
                   certified_ratio=certified_ratio(a2, rep))
        if count_selections(inst) <= budget:
            ex = exact_opt(inst, budget)
            row["exact"] = ex.length
            row["ratio_vs_exact"] = a2.length / ex.length if ex.length > 0 else 1.0
        else:
            row["note"] = f"exact skipped: {count_selections(inst)} selections > budget {budget}"
    except (BudgetExceeded, ValueError, ArithmeticError) as exc:
        row["note"] = f"error: {exc}"
    return row


def _run_star(args):
    return run_instance(*args)


def run_sweep(items: Iterable[tuple[str, Instance]], budget: int = DEFAULT_BUDGET,
              jobs: int = 1) -> list[dict]:
    """Evaluate every instance; results keep input order under any ``jobs``."""
    work = [(item, budget) for item in items]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_run_star, work))
    return [run_instance(*w) for w in work]


def summary_row(rows: list[dict]) -> dict:
    row = dict.fromkeys(COLUMNS)
    row["instance_id"] = "summary"
    for key in ("ratio_vs_exact", "certified_ratio"):
        vals = [r[key] for r in rows if r[key] is not None]
        row[key] = min(vals) if vals else None
    failures = sum(1 for r in rows if r["note"].startswith("error"))
    row["note"] = f"min over {len(rows)} instances; {failures} errors"
    return row


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(rows: list[dict]) -> str:
    """CSV text; a summary row is appended unless ``rows`` is empty."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    body = list(rows)
    if body:
        body.append(summary_row(rows))
    for r in body:
        w.writerow([_fmt(r[c]) for c in COLUMNS])
    return buf.getvalue()
