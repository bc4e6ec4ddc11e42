"""Smallest detecting quotient for an element of a group family.

A finite group Q detects a nontrivial element g when some homomorphism
from the family (not necessarily onto) sends g away from the identity.
The detection order is the least |Q| over a class of allowed quotients:
all groups, solvable ones, nilpotent ones, or p-groups for a fixed
prime.  Searching the catalog in ascending order with generator images
in lexicographic order makes the returned witness deterministic.

A Detector instance memoizes the valid image tuples per (family, group)
and the detection results, and can persist results as versioned JSON.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass
from itertools import product

from .catalog import Catalog
from .families import GroupFamily
from .groups import FiniteGroupTable
from .wreath import is_prime

DETECT_FORMAT_VERSION = 1


@dataclass(frozen=True)
class PropertyClass:
    """Which finite quotients are allowed: any, solvable, nilpotent, or
    p-groups for one prime.  All four are closed under subgroups, so a
    detecting image need not be surjective."""

    kind: str
    prime: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("any", "solvable", "nilpotent", "pgroup"):
            raise ValueError("unknown property kind %r" % self.kind)
        if self.kind == "pgroup":
            if not is_prime(self.prime):
                raise ValueError("pgroup needs a prime, got %d" % self.prime)
        elif self.prime:
            raise ValueError("prime only applies to pgroup")

    @property
    def tag(self) -> str:
        if self.kind == "pgroup":
            return "p%d" % self.prime
        return {"any": "any", "solvable": "sol", "nilpotent": "nil"}[self.kind]

    def admits(self, table: FiniteGroupTable) -> bool:
        if self.kind == "any":
            return True
        if self.kind == "solvable":
            return table.derived_length() is not None
        if self.kind == "nilpotent":
            return table.nilpotency_class() is not None
        n = table.order
        while n % self.prime == 0:
            n //= self.prime
        return n == 1

    @classmethod
    def parse(cls, text: str) -> "PropertyClass":
        text = text.strip().lower()
        if text in ("any", "all"):
            return ANY
        if text in ("sol", "solvable"):
            return SOLVABLE
        if text in ("nil", "nilpotent"):
            return NILPOTENT
        if text.startswith("p") and text[1:].isdigit():
            return cls("pgroup", int(text[1:]))
        raise ValueError(
            "unknown property %r (expected any, sol, nil, or p<prime>)" % text
        )


ANY = PropertyClass("any")
SOLVABLE = PropertyClass("solvable")
NILPOTENT = PropertyClass("nilpotent")


@dataclass(frozen=True)
class DetectionResult:
    family: str
    element: str
    prop: str
    bound: int
    order: int | None  # least detecting order, or None when the bound is exceeded
    group_name: str | None = None
    images: tuple[int, ...] | None = None

    @property
    def resolved(self) -> bool:
        return self.order is not None

    def value_text(self) -> str:
        return str(self.order) if self.order is not None else "> %d" % self.bound

    def describe(self) -> str:
        if self.order is None:
            return (
                "no quotient of order <= %d detects %s (property %s)"
                % (self.bound, self.element, self.prop)
            )
        return "order %d (group %s, images %s) detects %s (property %s)" % (
            self.order,
            self.group_name,
            list(self.images or ()),
            self.element,
            self.prop,
        )


class Detector:
    """Detection searches over one catalog, with memoized homomorphism
    tuples and a persistable result cache.  Safe to share across threads."""

    def __init__(self, catalog: Catalog, cache_path: str | None = None):
        self.catalog = catalog
        self._homs: dict[tuple[str, str], tuple[tuple[int, ...], ...]] = {}
        self._results: dict[str, DetectionResult] = {}
        self._lock = threading.Lock()
        self._cache_path = cache_path
        if cache_path:
            self._load(cache_path)

    # -- result cache ----------------------------------------------------------

    @staticmethod
    def _result_key(family_tag: str, element_key: str, prop_tag: str, bound: int) -> str:
        return "%s|%s|%d|%s" % (family_tag, prop_tag, bound, element_key)

    def _load(self, path: str) -> None:
        try:
            with open(path) as handle:
                payload = json.load(handle)
            if payload.get("format_version") != DETECT_FORMAT_VERSION:
                return
            if payload.get("bound") != self.catalog.bound:
                return
            for key, item in payload.get("entries", {}).items():
                images = item.get("images")
                self._results[key] = DetectionResult(
                    family=item["family"],
                    element=item["element"],
                    prop=item["prop"],
                    bound=self.catalog.bound,
                    order=item["order"],
                    group_name=item.get("group_name"),
                    images=tuple(images) if images is not None else None,
                )
        except (OSError, ValueError, KeyError, TypeError):
            self._results.clear()

    def save(self, path: str | None = None) -> None:
        path = path or self._cache_path
        if not path:
            return
        with self._lock:
            entries = {
                key: {
                    "family": r.family,
                    "element": r.element,
                    "prop": r.prop,
                    "order": r.order,
                    "group_name": r.group_name,
                    "images": list(r.images) if r.images is not None else None,
                }
                for key, r in self._results.items()
            }
        payload = {
            "format_version": DETECT_FORMAT_VERSION,
            "bound": self.catalog.bound,
            "entries": entries,
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

    # -- homomorphism tuples -----------------------------------------------------

    def valid_images(self, family: GroupFamily, table: FiniteGroupTable) -> tuple[tuple[int, ...], ...]:
        """Generator image tuples that satisfy the family's relations,
        in lexicographic order."""
        key = (family.tag, table.name)
        with self._lock:
            cached = self._homs.get(key)
        if cached is not None:
            return cached
        tuples = tuple(
            images
            for images in product(range(table.order), repeat=family.rank)
            if family.relations_hold(table, images)
        )
        with self._lock:
            self._homs[key] = tuples
        return tuples

    # -- search -------------------------------------------------------------------

    def detect(self, family: GroupFamily, element, prop: PropertyClass = ANY) -> DetectionResult:
        if family.is_identity(element):
            raise ValueError("the identity is fixed by every homomorphism")
        element_key = family.key(element)
        key = self._result_key(family.tag, element_key, prop.tag, self.catalog.bound)
        with self._lock:
            hit = self._results.get(key)
        if hit is not None:
            return hit
        result = None
        for table in self.catalog.groups:
            if not prop.admits(table):
                continue
            for images in self.valid_images(family, table):
                if family.image(table, images, element) != 0:
                    result = DetectionResult(
                        family=family.tag,
                        element=element_key,
                        prop=prop.tag,
                        bound=self.catalog.bound,
                        order=table.order,
                        group_name=table.name,
                        images=images,
                    )
                    break
            if result is not None:
                break
        if result is None:
            result = DetectionResult(
                family=family.tag,
                element=element_key,
                prop=prop.tag,
                bound=self.catalog.bound,
                order=None,
            )
        with self._lock:
            self._results[key] = result
        return result


def detect(family: GroupFamily, element, prop: PropertyClass, catalog: Catalog,
           detector: Detector | None = None) -> DetectionResult:
    """One-shot detection; pass a Detector to reuse its caches."""
    if detector is None:
        detector = Detector(catalog)
    return detector.detect(family, element, prop)


# -- normal subgroup counting -----------------------------------------------------


def normal_subgroup_count(catalog: Catalog, index: int, rank: int = 2) -> int:
    """Number of normal subgroups of the given index in the free group of
    the given rank: surjections onto each isomorphism class, divided by
    automorphisms (two surjections share a kernel iff they differ by one)."""
    if index < 1:
        raise ValueError("index must be >= 1")
    if index > catalog.bound:
        raise ValueError(
            "index %d outside catalog bound %d" % (index, catalog.bound)
        )
    total = 0
    for table in catalog.of_order(index):
        n = table.order
        everything = frozenset(range(n))
        surjections = sum(
            1
            for images in product(range(n), repeat=rank)
            if table.subgroup_closure(images) == everything
        )
        aut = len(table.automorphisms())
        if surjections % aut:
            raise RuntimeError(
                "automorphism orbit count for %s is not integral" % table.name
            )
        total += surjections // aut
    return total


# -- detection floors ---------------------------------------------------------------


@dataclass(frozen=True)
class FloorReport:
    """Outcome of exhaustively checking that nothing below a target order
    detects an element."""

    family: str
    element: str
    target: int
    bound: int
    orders_scanned: tuple[int, ...]
    homs_checked: int
    violations: tuple[str, ...]
    detection: DetectionResult

    @property
    def floor_holds(self) -> bool:
        scan_complete = self.bound >= self.target - 1
        consistent = self.detection.order is None or self.detection.order >= self.target
        return not self.violations and scan_complete and consistent

    def describe(self) -> str:
        status = "holds" if self.floor_holds else "FAILS"
        return (
            "floor %d for %s in %s: %s (%d homs over orders %s; full search: %s)"
            % (
                self.target,
                self.element,
                self.family,
                status,
                self.homs_checked,
                list(self.orders_scanned),
                self.detection.value_text(),
            )
        )


def detection_floor_verify(family: GroupFamily, element, target: int,
                           catalog: Catalog, detector: Detector | None = None) -> FloorReport:
    """Check every homomorphism into every catalog group of order below
    `target` kills the element, then run the full detection search."""
    if detector is None:
        detector = Detector(catalog)
    if family.is_identity(element):
        raise ValueError("the identity has no detection floor")
    homs_checked = 0
    violations: list[str] = []
    orders = sorted({t.order for t in catalog.groups if 1 < t.order < target})
    for table in catalog.groups:
        if not 1 < table.order < target:
            continue
        for images in detector.valid_images(family, table):
            homs_checked += 1
            if family.image(table, images, element) != 0:
                violations.append(
                    "order %d group %s images %s" % (table.order, table.name, list(images))
                )
    detection = detector.detect(family, element, ANY)
    return FloorReport(
        family=family.tag,
        element=family.key(element),
        target=target,
        bound=catalog.bound,
        orders_scanned=tuple(orders),
        homs_checked=homs_checked,
        violations=tuple(violations),
        detection=detection,
    )
