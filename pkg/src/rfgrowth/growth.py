"""Growth functions over a family: detection growth F(n), word growth
w(n), and the inequality tying them to normal subgroup counts.

F(n) is the largest smallest-detecting-quotient order over the
nontrivial elements of the radius-n ball.  When some element resists
every catalog quotient the value is reported as a lower bound (bound+1,
flagged exact=False with the first such element as witness) and never
silently interpolated.  The n = 0 ball has no nontrivial elements; F(0)
is fixed to 1.

Tables carry their configuration snapshot and serialize to CSV (one
comment line holding the config as JSON, then a fixed header) or JSON;
both formats parse back to an equal table.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .catalog import Catalog
from .detect import ANY, Detector, PropertyClass, normal_subgroup_count
from .families import GroupFamily

TABLE_FORMAT_VERSION = 1
CSV_HEADER = ("family", "prop", "n", "value", "exact", "witness", "witness_order", "seconds")


@dataclass(frozen=True)
class GrowthRecord:
    family: str
    prop: str
    n: int
    value: int
    exact: bool  # False: value is a certified lower bound
    witness: str | None  # element achieving the max, or first unresolved one
    witness_order: int | None  # its detecting quotient order (None if unresolved)
    seconds: float


@dataclass(frozen=True)
class GrowthTable:
    config: dict
    rows: tuple[GrowthRecord, ...]

    def resolved_rows(self) -> tuple[GrowthRecord, ...]:
        return tuple(r for r in self.rows if r.exact)


def growth_F(family: GroupFamily, prop: PropertyClass, n: int, catalog: Catalog,
             detector: Detector | None = None, jobs: int = 1) -> GrowthRecord:
    """Max detection order over the nontrivial elements of the radius-n
    ball; exact when every element resolves within the catalog."""
    if n < 0:
        raise ValueError("radius must be >= 0")
    if detector is None:
        detector = Detector(catalog)
    start = time.perf_counter()
    if n == 0:
        return GrowthRecord(family.tag, prop.tag, 0, 1, True, None, None,
                            time.perf_counter() - start)
    ball = family.ball(n)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda item: detector.detect(family, item[0], prop), ball))
    else:
        results = [detector.detect(family, element, prop) for element, _ in ball]
    best = 1
    witness: str | None = None
    witness_order: int | None = None
    for (element, _dist), result in zip(ball, results):
        if result.order is None:
            # this element needs a quotient beyond the catalog: F(n) > bound
            return GrowthRecord(
                family.tag, prop.tag, n, catalog.bound + 1, False,
                family.key(element), None, time.perf_counter() - start,
            )
        if result.order > best:
            best = result.order
            witness = family.key(element)
            witness_order = result.order
    return GrowthRecord(family.tag, prop.tag, n, best, True, witness, witness_order,
                        time.perf_counter() - start)


def word_growth(family: GroupFamily, n: int, budget: int | None = None) -> int:
    """Number of elements of word length <= n, identity included."""
    if n < 0:
        raise ValueError("radius must be >= 0")
    if budget is None:
        return len(family.ball(n)) + 1
    return len(family.ball(n, budget)) + 1


def growth_table(family: GroupFamily, prop: PropertyClass, nmax: int, catalog: Catalog,
                 detector: Detector | None = None, jobs: int = 1, seed: int = 0,
                 extra_config: dict | None = None) -> GrowthTable:
    """Rows n = 1..nmax (nmax 0 gives an empty table)."""
    if detector is None:
        detector = Detector(catalog)
    config = {
        "format_version": TABLE_FORMAT_VERSION,
        "family": family.tag,
        "prop": prop.tag,
        "bound": catalog.bound,
        "nmax": nmax,
        "jobs": jobs,
        "seed": seed,
    }
    if extra_config:
        config.update(extra_config)
    rows = tuple(
        growth_F(family, prop, n, catalog, detector, jobs) for n in range(1, nmax + 1)
    )
    return GrowthTable(config, rows)


# -- the integers, independently -----------------------------------------------------


def minimal_nondivisor(m: int) -> int:
    """min {d >= 2 : d does not divide m}; the detection order of m in Z."""
    if m == 0:
        raise ValueError("0 is the identity")
    d = 2
    while m % d == 0:
        d += 1
    return d


def integer_line_reference(n: int) -> int:
    """Closed form for F on the integers: the largest minimal non-divisor
    over 1 <= m <= n (negative m mirror positives)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return max(minimal_nondivisor(m) for m in range(1, n + 1))


# -- the word growth / subgroup growth inequality -------------------------------------


@dataclass(frozen=True)
class Ineq3Row:
    n: int
    word_count: int
    f_record: GrowthRecord
    subgroup_count: int | None
    lhs: float
    rhs: float | None

    @property
    def inconclusive(self) -> bool:
        return not self.f_record.exact

    @property
    def holds(self) -> bool | None:
        if self.inconclusive:
            return None
        return self.lhs <= self.rhs + 1e-12

    def describe(self) -> str:
        if self.inconclusive:
            return "n=%d: inconclusive (F(%d) unresolved within bound %d)" % (
                self.n, 2 * self.n, self.f_record.value - 1
            )
        return "n=%d: log w = %.6f <= %d * log %d = %.6f -> %s" % (
            self.n, self.lhs, self.subgroup_count, self.f_record.value,
            self.rhs, "holds" if self.holds else "VIOLATED",
        )


def inequality3_check(n: int, catalog: Catalog, family: GroupFamily,
                      detector: Detector | None = None) -> Ineq3Row:
    """log w(n) <= s(F(2n)) * log F(2n), all quantities computed here;
    unresolved F(2n) makes the row inconclusive rather than a verdict."""
    if detector is None:
        detector = Detector(catalog)
    w = word_growth(family, n)
    f_rec = growth_F(family, ANY, 2 * n, catalog, detector)
    lhs = math.log(w)
    if not f_rec.exact:
        return Ineq3Row(n, w, f_rec, None, lhs, None)
    s_count = normal_subgroup_count(catalog, f_rec.value, rank=family.rank)
    rhs = s_count * math.log(f_rec.value)
    return Ineq3Row(n, w, f_rec, s_count, lhs, rhs)


# -- serialization ---------------------------------------------------------------------


def table_export(table: GrowthTable, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "config": table.config,
            "rows": [
                {
                    "family": r.family, "prop": r.prop, "n": r.n, "value": r.value,
                    "exact": r.exact, "witness": r.witness,
                    "witness_order": r.witness_order, "seconds": r.seconds,
                }
                for r in table.rows
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        out.write("# config %s\n" % json.dumps(table.config, sort_keys=True))
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER)
        for r in table.rows:
            writer.writerow([
                r.family, r.prop, r.n, r.value,
                "true" if r.exact else "false",
                r.witness if r.witness is not None else "",
                r.witness_order if r.witness_order is not None else "",
                repr(r.seconds),
            ])
        return out.getvalue()
    raise ValueError("unknown format %r (expected csv or json)" % fmt)


def table_parse(text: str, fmt: str) -> GrowthTable:
    if fmt == "json":
        payload = json.loads(text)
        rows = tuple(
            GrowthRecord(
                family=item["family"], prop=item["prop"], n=item["n"],
                value=item["value"], exact=item["exact"], witness=item["witness"],
                witness_order=item["witness_order"], seconds=item["seconds"],
            )
            for item in payload["rows"]
        )
        return GrowthTable(payload["config"], rows)
    if fmt == "csv":
        lines = text.splitlines()
        config: dict = {}
        body: list[str] = []
        for line in lines:
            if line.startswith("# config "):
                config = json.loads(line[len("# config "):])
            elif line.strip():
                body.append(line)
        reader = csv.reader(body)
        header = next(reader, None)
        if header is None or tuple(header) != CSV_HEADER:
            raise ValueError("bad or missing CSV header")
        rows = []
        for rec in reader:
            family, prop, n, value, exact, witness, witness_order, seconds = rec
            rows.append(GrowthRecord(
                family=family, prop=prop, n=int(n), value=int(value),
                exact=exact == "true",
                witness=witness if witness else None,
                witness_order=int(witness_order) if witness_order else None,
                seconds=float(seconds),
            ))
        return GrowthTable(config, tuple(rows))
    raise ValueError("unknown format %r (expected csv or json)" % fmt)


# -- diagnostics ------------------------------------------------------------------------


@dataclass(frozen=True)
class FitReport:
    slope: float
    intercept: float
    residual: float
    used: int
    excluded: int
    label: str = "diagnostic"


def loglog_fit(table: GrowthTable) -> FitReport:
    """Least-squares slope of log F(n) against log log n over exact rows
    with n >= 2 (log log is undefined at n <= 1).  A diagnostic only: a
    finite table supports no asymptotic claim."""
    usable = [r for r in table.rows if r.exact and r.n >= 2]
    excluded = len(table.rows) - len(usable)
    if len(usable) < 3:
        raise ValueError("need at least 3 usable rows, have %d" % len(usable))
    xs = np.array([math.log(math.log(r.n)) for r in usable])
    ys = np.array([math.log(r.value) for r in usable])
    coeffs, residuals, _, _, _ = np.polyfit(xs, ys, 1, full=True)
    residual = float(residuals[0]) if len(residuals) else 0.0
    return FitReport(
        slope=float(coeffs[0]), intercept=float(coeffs[1]),
        residual=residual, used=len(usable), excluded=excluded,
    )
