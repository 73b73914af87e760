"""Global lattice conditions on ribbon tableaux: column words, row-number
tableaux, the r = 2 rule, the hook case, a table of counterexamples, and a
resumable harness for the two-row upper-bound conjecture.
"""

from __future__ import annotations

import json
import logging
import os
import random
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .abacus import sgn_r
from .coplactic import is_latticed
from .partitions import Partition, SkewShape, as_partition, partitions, skew
from .ribbon import RibbonTableau, column_word, enumerate_ribbon_tableaux, row_number_tableau
from .symfunc import oracle_product_plethysm
from .sxp import sxp_classic, sxp_coefficient

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RibbonCounts:
    rt: int
    cwl: int
    rntl: int
    cwl_not_rntl: int  # tableaux with latticed column word but unlatticed row-number tableau


def classify(T: RibbonTableau) -> tuple[bool, bool]:
    """(column word latticed, row-number tableau latticed)."""
    return is_latticed(column_word(T)), is_latticed(row_number_tableau(T).word())


def ribbon_counts(s: SkewShape, lam: Sequence[int], r: int) -> RibbonCounts:
    rt = cwl = rntl = bad = 0
    for T in enumerate_ribbon_tableaux(s, lam, r):
        c, n = classify(T)
        rt += 1
        cwl += c
        rntl += n
        bad += c and not n
    return RibbonCounts(rt, cwl, rntl, bad)


def count_cwl(s: SkewShape, lam: Sequence[int], r: int) -> int:
    return sum(1 for T in enumerate_ribbon_tableaux(s, lam, r) if is_latticed(column_word(T)))


def count_rntl(s: SkewShape, lam: Sequence[int], r: int) -> int:
    return sum(1 for T in enumerate_ribbon_tableaux(s, lam, r) if is_latticed(row_number_tableau(T).word()))


def carre_leclerc_check(tau: Sequence[int], lam: Sequence[int], nu: Sequence[int]) -> bool:
    """For r = 2: the multiplicity is sgn_2(nu/tau) times the number of
    2-ribbon tableaux with latticed column word."""
    tau, lam, nu = as_partition(tau), as_partition(lam), as_partition(nu)
    s = skew(nu, tau)
    mult = sxp_coefficient(tau, skew(lam), 2, nu)
    return mult == sgn_r(s, 2) * count_cwl(s, lam, 2)


def hook_column_word_ok(w: Sequence[int], a: int, b: int) -> bool:
    """The labels 2..b+1 appear in decreasing order and there are ``a`` ones."""
    return [x for x in w if x > 1] == list(range(b + 1, 1, -1)) and list(w).count(1) == a


def hook_check(tau: Sequence[int], a: int, b: int, nu: Sequence[int], r: int) -> bool:
    """For lam = (a, 1^b): the multiplicity is sgn_r(nu/tau) times the number
    of ribbon tableaux with latticed row-number tableau, and each such
    tableau has a latticed column word with labels b+1, ..., 2 in decreasing
    order.

    The row-number word and the column word of a witness need not be equal:
    for r = 2, nu = (3, 3) and lam = (2, 1) they are 211 and 121.
    """
    tau, nu = as_partition(tau), as_partition(nu)
    lam = as_partition((a,) + (1,) * b)
    s = skew(nu, tau)
    witnesses = [T for T in enumerate_ribbon_tableaux(s, lam, r) if is_latticed(row_number_tableau(T).word())]
    if sxp_coefficient(tau, skew(lam), r, nu) != sgn_r(s, r) * len(witnesses):
        return False
    for T in witnesses:
        w = column_word(T)
        if not is_latticed(w) or not hook_column_word_ok(w, a, b):
            return False
    return True


# The table of counterexamples to the obvious generalisations.

TABLE_CASES: tuple[tuple[Partition, Partition, int, Partition], ...] = (
    ((), (3, 3), 3, (6, 6, 6)),
    ((), (2, 2, 2), 4, (7, 4, 4, 4, 4, 1)),
    ((1,), (3, 3), 3, (6, 6, 6, 1)),
    ((1,), (2, 2), 4, (5, 4, 4, 4)),
)


@dataclass(frozen=True)
class TableRow:
    tau: Partition
    lam: Partition
    r: int
    nu: Partition
    mult: int
    rt: int
    cwl: int
    rntl: int

    def to_json(self) -> dict:
        return {"tau": list(self.tau), "lambda": list(self.lam), "r": self.r, "nu": list(self.nu),
                "mult": self.mult, "rt": self.rt, "cwl": self.cwl, "rntl": self.rntl}


def table_row(tau: Sequence[int], lam: Sequence[int], r: int, nu: Sequence[int]) -> TableRow:
    tau, lam, nu = as_partition(tau), as_partition(lam), as_partition(nu)
    counts = ribbon_counts(skew(nu, tau), lam, r)
    mult = sxp_coefficient(tau, skew(lam), r, nu)
    return TableRow(tau, lam, r, nu, mult, counts.rt, counts.cwl, counts.rntl)


def reproduce_table() -> list[TableRow]:
    return [table_row(*case) for case in TABLE_CASES]


# The conjecture harness.

Cell = dict


def _cell_key(rec: Cell) -> tuple:
    return (rec["r"], rec["n"], tuple(rec["nu"]), tuple(rec["lambda"]))


def _sort_key(rec: Cell) -> tuple:
    return (rec["r"], rec["n"], tuple(-x for x in rec["nu"]), tuple(-x for x in rec["lambda"]))


def two_row_weights(n: int) -> list[Partition]:
    return [as_partition((n - b, b)) for b in range(0, n // 2 + 1)]


@lru_cache(maxsize=None)
def _classic(lam: Partition, r: int):
    return sxp_classic(lam, r)


@lru_cache(maxsize=None)
def _oracle(lam: Partition, r: int):
    return oracle_product_plethysm((), skew(lam), r)


def _audited(seed: int, r: int, nu: Partition, lam: Partition, rate: float) -> bool:
    return random.Random(f"{seed}:{r}:{list(nu)}:{list(lam)}").random() < rate


def _shard(args: tuple) -> list[tuple[Cell, bool | None]]:
    """All cells for one (r, nu); returns records and audit outcomes."""
    r, n, nu, weights, seed, rate = args
    out = []
    for lam in weights:
        counts = ribbon_counts(SkewShape(nu, ()), lam, r)
        mult = _classic(lam, r).get(nu)
        rec = {"r": r, "n": n, "nu": list(nu), "lambda": list(lam), "mult": mult,
               "rt": counts.rt, "cwl": counts.cwl, "rntl": counts.rntl}
        audit = None
        if _audited(seed, r, nu, lam, rate):
            audit = _oracle(lam, r).get(nu) == mult
        out.append((rec, audit))
    return out


def _read_report(path: Path) -> list[Cell]:
    if not path.exists():
        return []
    records = []
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                try:
                    records.append(json.loads(line))
                except json.JSONDecodeError:
                    log.warning("skipping truncated line in %s", path)
    return records


def _write_sorted(path: Path, records: Iterable[Cell]) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        for rec in sorted(records, key=_sort_key):
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
    os.replace(tmp, path)


@dataclass
class Report:
    path: Path
    cells: int
    violations: list[Cell]
    b1_inequalities: list[Cell]
    min_slack: int | None
    max_slack: int | None
    audited: int
    audit_failures: int

    @property
    def ok(self) -> bool:
        return not self.violations and not self.b1_inequalities and not self.audit_failures

    def to_json(self) -> dict:
        return {
            "report": str(self.path),
            "cells": self.cells,
            "violations": self.violations,
            "b1_inequalities": self.b1_inequalities,
            "min_slack": self.min_slack,
            "max_slack": self.max_slack,
            "audited": self.audited,
            "audit_failures": self.audit_failures,
            "ok": self.ok,
        }


def summarize(path: Path, records: Sequence[Cell], audited: int = 0, audit_failures: int = 0) -> Report:
    slacks = [rec["rntl"] - abs(rec["mult"]) for rec in records]
    violations = [rec for rec, s in zip(records, slacks) if s < 0]
    b1 = [rec for rec, s in zip(records, slacks) if len(rec["lambda"]) == 2 and rec["lambda"][1] == 1 and s != 0]
    return Report(path, len(records), sorted(violations, key=_sort_key), sorted(b1, key=_sort_key),
                  min(slacks, default=None), max(slacks, default=None), audited, audit_failures)


def conjecture_tasks(r_max: int, n_max: int, done: set | frozenset = frozenset(), seed: int = 0,
                     audit_rate: float = 0.01) -> Iterator[tuple]:
    for r in range(1, r_max + 1):
        for n in range(0, n_max + 1):
            weights = two_row_weights(n)
            for nu in partitions(r * n):
                pending = tuple(lam for lam in weights if (r, n, nu, lam) not in done)
                if pending:
                    yield (r, n, nu, pending, seed, audit_rate)


def verify_conjecture(r_max: int, n_max: int, out: str | os.PathLike, resume: bool = False, jobs: int = 1,
                      seed: int = 0, audit_rate: float = 0.01) -> Report:
    """Check |<s_(a,b) o p_r, s_nu>| <= #RNTL over every cell, writing one
    JSON line per cell to ``out`` (sorted canonically at the end)."""
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    records = _read_report(path) if resume else []
    done = {_cell_key(rec) for rec in records}
    if not resume and path.exists():
        path.unlink()
    tasks = list(conjecture_tasks(r_max, n_max, done, seed, audit_rate))
    audited = failures = 0
    with path.open("a") as fh:
        if jobs > 1:
            pool = ProcessPoolExecutor(max_workers=jobs)
            results = pool.map(_shard, tasks, chunksize=4)
        else:
            pool = None
            results = map(_shard, tasks)
        try:
            for shard in results:
                for rec, audit in shard:
                    records.append(rec)
                    fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
                    if audit is not None:
                        audited += 1
                        failures += not audit
                fh.flush()
        finally:
            if pool is not None:
                pool.shutdown()
    # keep only cells in range, so a resumed run with smaller bounds is honest
    records = [rec for rec in records if rec["r"] <= r_max and rec["n"] <= n_max]
    _write_sorted(path, records)
    report = summarize(path, records, audited, failures)
    log.info("checked %d cells, %d violations", report.cells, len(report.violations))
    return report
