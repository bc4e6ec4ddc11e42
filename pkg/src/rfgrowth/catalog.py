"""One multiplication table per isomorphism class of small finite groups.

Construction: every group of order at most 31 is solvable, hence has a
normal subgroup of prime index p, so it arises from a smaller group N
as a cyclic extension: pick alpha in Aut(N) and u in N with
alpha(u) = u and alpha^p = conjugation by u, then multiply pairs
(x, t^i) by t y t^-1 = alpha(y), t^p = u.  Building orders bottom-up
and deduplicating by fingerprint-then-isomorphism yields the complete
catalog.  Each candidate table passes the full group-axiom validation
in FiniteGroupTable, and the test suite cross-checks class counts
against an independent enumeration route.

Catalogs persist as versioned JSON; anything stale, corrupt, or
mismatched is rebuilt rather than trusted.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetError
from .groups import FiniteGroupTable, cyclic_table

CATALOG_FORMAT_VERSION = 1
DEFAULT_BOUND = 16
DEFAULT_MAX_BOUND = 16
HARD_MAX_BOUND = 31  # the first non-solvable order is 60; stay well clear


def prime_divisors(n: int) -> list[int]:
    """Distinct primes dividing n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(f[x] for x in g)


def cyclic_extensions(base: FiniteGroupTable, p: int) -> Iterator[FiniteGroupTable]:
    """All groups of order base.order * p with a normal copy of base and
    cyclic quotient of order p (tables, with duplicates)."""
    m = base.order
    identity_map = tuple(range(m))
    for alpha in base.automorphisms():
        alpha_pows = [identity_map]
        for _ in range(p):
            alpha_pows.append(_compose(alpha, alpha_pows[-1]))
        for u in range(m):
            if alpha[u] != u:
                continue
            if any(alpha_pows[p][y] != base.conj(y, u) for y in range(m)):
                continue
            # element (x, i) sits at index i*m + x; (x,i)(y,j) = (x a^i(y) u^[i+j>=p], i+j)
            table = [[0] * (m * p) for _ in range(m * p)]
            for i in range(p):
                for x in range(m):
                    for j in range(p):
                        for y in range(m):
                            z = base.mul[x][alpha_pows[i][y]]
                            if i + j >= p:
                                z = base.mul[z][u]
                            table[i * m + x][j * m + y] = ((i + j) % p) * m + z
            yield FiniteGroupTable(tuple(tuple(r) for r in table))


@dataclass(frozen=True)
class Catalog:
    bound: int
    groups: tuple[FiniteGroupTable, ...]  # ascending order, stable within an order

    def __iter__(self):
        return iter(self.groups)

    def of_order(self, n: int) -> tuple[FiniteGroupTable, ...]:
        return tuple(g for g in self.groups if g.order == n)

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {n: 0 for n in range(1, self.bound + 1)}
        for g in self.groups:
            out[g.order] += 1
        return out


def catalog_build(bound: int = DEFAULT_BOUND, maximum: int = DEFAULT_MAX_BOUND) -> Catalog:
    """Catalog of all groups of order <= bound, one per isomorphism class."""
    if bound < 1:
        raise ValueError("bound must be >= 1, got %d" % bound)
    if bound > maximum:
        raise BudgetError("bound %d exceeds configured maximum %d" % (bound, maximum))
    if maximum > HARD_MAX_BOUND:
        raise ValueError(
            "maximum %d exceeds %d; the extension construction only covers "
            "solvable orders" % (maximum, HARD_MAX_BOUND)
        )
    by_order: dict[int, list[FiniteGroupTable]] = {1: [cyclic_table(1, name="1.1")]}
    for n in range(2, bound + 1):
        found: list[FiniteGroupTable] = []
        buckets: dict[tuple, list[int]] = {}
        for p in prime_divisors(n):
            for base in by_order[n // p]:
                for cand in cyclic_extensions(base, p):
                    fp = cand.fingerprint()
                    bucket = buckets.setdefault(fp, [])
                    if any(cand.is_isomorphic(found[i]) for i in bucket):
                        continue
                    named = FiniteGroupTable(
                        cand.mul, name="%d.%d" % (n, len(found) + 1)
                    )
                    bucket.append(len(found))
                    found.append(named)
        by_order[n] = found
    groups: list[FiniteGroupTable] = []
    for n in range(1, bound + 1):
        groups.extend(by_order[n])
    return Catalog(bound, tuple(groups))


# -- persistence ---------------------------------------------------------------


def save_catalog(catalog: Catalog, path: str) -> None:
    payload = {
        "format_version": CATALOG_FORMAT_VERSION,
        "bound": catalog.bound,
        "groups": [
            {"name": g.name, "order": g.order, "mul": [list(row) for row in g.mul]}
            for g in catalog.groups
        ],
    }
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(payload, handle)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_catalog(path: str, bound: int) -> Catalog | None:
    """Load a cached catalog; any mismatch or corruption returns None."""
    try:
        with open(path) as handle:
            payload = json.load(handle)
        if payload.get("format_version") != CATALOG_FORMAT_VERSION:
            return None
        if payload.get("bound") != bound:
            return None
        groups = tuple(
            FiniteGroupTable(
                tuple(tuple(int(v) for v in row) for row in spec["mul"]),
                name=str(spec.get("name", "")),
            )
            for spec in payload["groups"]
        )
    except (OSError, ValueError, KeyError, TypeError):
        return None
    return Catalog(bound, groups)


def catalog_cache_path(cache_dir: str, bound: int) -> str:
    return os.path.join(
        cache_dir, "catalog-b%d-v%d.json" % (bound, CATALOG_FORMAT_VERSION)
    )


def ensure_catalog(bound: int = DEFAULT_BOUND, cache_dir: str | None = None,
                   maximum: int = DEFAULT_MAX_BOUND) -> tuple[Catalog, str]:
    """Load from cache or build and cache; returns (catalog, "cache"|"built")."""
    if cache_dir:
        path = catalog_cache_path(cache_dir, bound)
        cached = load_catalog(path, bound)
        if cached is not None:
            return cached, "cache"
    catalog = catalog_build(bound, maximum=maximum)
    if cache_dir:
        save_catalog(catalog, catalog_cache_path(cache_dir, bound))
    return catalog, "built"
