"""Finite groups as explicit multiplication tables.

Tables are tiny (the catalog stops at order 16), so everything here is
exhaustive: group axioms are verified on construction, nilpotency class
and derived length walk the actual commutator series, isomorphism is a
fingerprint gate followed by a search over generator images.

Index 0 is always the identity.  The lower central series is indexed
from the whole group: term 0 is G, term k is [term k-1, G], and the
class is the least k with term k trivial, so the trivial group has
class 0 and abelian groups class 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .errors import BudgetError

DEFAULT_CLOSURE_BUDGET = 4096


def _validate_table(mul: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Check the group axioms exhaustively; return the inverse table."""
    n = len(mul)
    if n < 1:
        raise ValueError("a group table needs at least the identity")
    arr = np.array(mul, dtype=np.int64)
    if arr.shape != (n, n) or arr.min() < 0 or arr.max() >= n:
        raise ValueError("malformed multiplication table")
    if list(arr[0]) != list(range(n)) or list(arr[:, 0]) != list(range(n)):
        raise ValueError("index 0 is not a two-sided identity")
    ident = np.arange(n)
    for i in range(n):
        if sorted(arr[i]) != list(ident) or sorted(arr[:, i]) != list(ident):
            raise ValueError("row or column %d is not a permutation" % i)
    # (i j) k vs i (j k), all triples at once
    if not np.array_equal(arr[arr, :], arr[:, arr]):
        raise ValueError("multiplication is not associative")
    inv = [0] * n
    for i in range(n):
        js = np.flatnonzero(arr[i] == 0)
        inv[i] = int(js[0])
    return tuple(inv)


@dataclass(frozen=True)
class FiniteGroupTable:
    mul: tuple[tuple[int, ...], ...]
    gens: tuple[int, ...] = ()
    name: str = ""
    inv: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "inv", _validate_table(self.mul))
        if self.gens and self.subgroup_closure(self.gens) != frozenset(range(self.order)):
            raise ValueError("marked generators do not generate the table")
        object.__setattr__(self, "_cache", {})

    @property
    def order(self) -> int:
        return len(self.mul)

    def __hash__(self) -> int:
        return hash(self.mul)

    def _cached(self, key, compute):
        cache = object.__getattribute__(self, "_cache")
        if key not in cache:
            cache[key] = compute()
        return cache[key]

    # -- elementwise helpers -------------------------------------------------

    def conj(self, a: int, b: int) -> int:
        """b a b^-1"""
        return self.mul[self.mul[b][a]][self.inv[b]]

    def comm(self, a: int, b: int) -> int:
        """a b a^-1 b^-1"""
        return self.mul[self.mul[self.mul[a][b]][self.inv[a]]][self.inv[b]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[a], -k)
        out = 0
        base = a
        while k:
            if k & 1:
                out = self.mul[out][base]
            base = self.mul[base][base]
            k >>= 1
        return out

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul[x][a]
            k += 1
        return k

    # -- subgroup machinery --------------------------------------------------

    def subgroup_closure(self, seed) -> frozenset[int]:
        members = {0} | set(seed)
        while True:
            fresh = {self.mul[a][b] for a in members for b in members} - members
            if not fresh:
                return frozenset(members)
            members |= fresh

    def subgroup_commutator(self, left, right) -> frozenset[int]:
        return self.subgroup_closure({self.comm(a, b) for a in left for b in right})

    def element_orders(self) -> tuple[int, ...]:
        return self._cached("orders", lambda: tuple(sorted(self.order_of(a) for a in range(self.order))))

    def center(self) -> frozenset[int]:
        n = self.order
        return frozenset(
            a for a in range(n) if all(self.mul[a][b] == self.mul[b][a] for b in range(n))
        )

    def conjugacy_class_sizes(self) -> tuple[int, ...]:
        n = self.order
        seen: set[int] = set()
        sizes = []
        for a in range(n):
            if a in seen:
                continue
            cls = {self.conj(a, b) for b in range(n)}
            seen |= cls
            sizes.append(len(cls))
        return tuple(sorted(sizes))

    def is_abelian(self) -> bool:
        return self.center() == frozenset(range(self.order))

    def nilpotency_class(self) -> int | None:
        """Least k with the k-th lower central term trivial; None if none is."""
        def compute():
            whole = frozenset(range(self.order))
            term = whole
            k = 0
            while len(term) > 1:
                nxt = self.subgroup_commutator(term, whole)
                k += 1
                if nxt == term:
                    return None
                term = nxt
                if len(term) == 1:
                    return k
            return k
        return self._cached("nilclass", compute)

    def derived_length(self) -> int | None:
        def compute():
            term = frozenset(range(self.order))
            k = 0
            while len(term) > 1:
                nxt = self.subgroup_commutator(term, term)
                k += 1
                if nxt == term:
                    return None
                term = nxt
                if len(term) == 1:
                    return k
            return k
        return self._cached("derived", compute)

    def fingerprint(self) -> tuple:
        """Cheap isomorphism invariants, used to prune the real search."""
        def compute():
            return (
                self.order,
                self.element_orders(),
                len(self.center()),
                self.conjugacy_class_sizes(),
                self.derived_length(),
                self.nilpotency_class(),
            )
        return self._cached("fingerprint", compute)

    def minimal_generating_tuple(self) -> tuple[int, ...]:
        def compute():
            n = self.order
            if n == 1:
                return ()
            everything = frozenset(range(n))
            size = 1
            while True:
                for combo in combinations(range(1, n), size):
                    if self.subgroup_closure(combo) == everything:
                        return combo
                size += 1
        return self._cached("mingens", compute)

    def generating_tuples(self, rank: int):
        """Ordered tuples (repeats allowed) whose closure is the whole group."""
        everything = frozenset(range(self.order))
        for tup in product(range(self.order), repeat=rank):
            if self.subgroup_closure(tup) == everything:
                yield tup

    # -- homomorphisms and isomorphism ---------------------------------------

    def hom_from_generator_images(self, gens: tuple[int, ...], target: "FiniteGroupTable",
                                  images: tuple[int, ...]) -> tuple[int, ...] | None:
        """Extend gens -> images to a homomorphism on <gens>, or None.

        Every Cayley edge (x, x*g) is checked once, which is enough to
        force the homomorphism property on the generated subgroup.
        """
        mapping = {0: 0}
        queue = [0]
        while queue:
            x = queue.pop()
            fx = mapping[x]
            for g, fg in zip(gens, images):
                y = self.mul[x][g]
                fy = target.mul[fx][fg]
                known = mapping.get(y)
                if known is None:
                    mapping[y] = fy
                    queue.append(y)
                elif known != fy:
                    return None
        if len(mapping) != self.order:
            return None  # gens were not a generating set
        return tuple(mapping[i] for i in range(self.order))

    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        def compute():
            gens = self.minimal_generating_tuple()
            if not gens:
                return ((0,),) if self.order == 1 else ()
            gen_orders = [self.order_of(g) for g in gens]
            pools = [
                [a for a in range(self.order) if self.order_of(a) == o] for o in gen_orders
            ]
            found = []
            for images in product(*pools):
                mapping = self.hom_from_generator_images(gens, self, images)
                if mapping is not None and len(set(mapping)) == self.order:
                    found.append(mapping)
            return tuple(found)
        return self._cached("autos", compute)

    def find_isomorphism(self, other: "FiniteGroupTable") -> tuple[int, ...] | None:
        if self.order != other.order or self.fingerprint() != other.fingerprint():
            return None
        gens = self.minimal_generating_tuple()
        if not gens:
            return (0,)
        gen_orders = [self.order_of(g) for g in gens]
        pools = [
            [a for a in range(other.order) if other.order_of(a) == o] for o in gen_orders
        ]
        for images in product(*pools):
            mapping = self.hom_from_generator_images(gens, other, images)
            if mapping is not None and len(set(mapping)) == self.order:
                return mapping
        return None

    def is_isomorphic(self, other: "FiniteGroupTable") -> bool:
        return self.find_isomorphism(other) is not None

    # -- derived tables -------------------------------------------------------

    def subgroup_table(self, members: frozenset[int], name: str = "") -> "FiniteGroupTable":
        elems = sorted(members, key=lambda a: (a != 0, a))
        if elems[0] != 0:
            raise ValueError("subgroup must contain the identity")
        where = {a: i for i, a in enumerate(elems)}
        mul = tuple(tuple(where[self.mul[a][b]] for b in elems) for a in elems)
        return FiniteGroupTable(mul, name=name)

    def quotient_table(self, normal: frozenset[int], name: str = "") -> "FiniteGroupTable":
        reps: list[int] = []
        coset_of = {}
        for a in range(self.order):
            if a in coset_of:
                continue
            coset = {self.mul[a][h] for h in normal}
            if {self.mul[h][a] for h in normal} != coset:
                raise ValueError("subgroup is not normal")
            idx = len(reps)
            reps.append(a)
            for c in coset:
                coset_of[c] = idx
        mul = tuple(
            tuple(coset_of[self.mul[reps[i]][reps[j]]] for j in range(len(reps)))
            for i in range(len(reps))
        )
        return FiniteGroupTable(mul, name=name)

    def all_subgroups(self) -> list[frozenset[int]]:
        """Every subgroup (orders here never need more than 4 generators)."""
        found = {frozenset({0}), frozenset(range(self.order))}
        for size in range(1, 5):
            for seed in combinations(range(1, self.order), size):
                found.add(self.subgroup_closure(seed))
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def normal_subgroups(self) -> list[frozenset[int]]:
        out = []
        for sub in self.all_subgroups():
            if all(self.conj(a, b) in sub for a in sub for b in range(self.order)):
                out.append(sub)
        return out

    def __repr__(self) -> str:
        label = self.name or "order %d" % self.order
        return "FiniteGroupTable(%s)" % label


def closure(perms, max_order: int = DEFAULT_CLOSURE_BUDGET, name: str = "") -> FiniteGroupTable:
    """Close a set of permutations (tuples) into a FiniteGroupTable.

    Permutations act on range(k); the table relabels elements so the
    identity sits at index 0 and marks the seeds as generators.
    """
    perms = [tuple(p) for p in perms]
    if not perms:
        raise ValueError("need at least one permutation")
    k = len(perms[0])
    ident = tuple(range(k))
    for p in perms:
        if sorted(p) != list(ident):
            raise ValueError("not a permutation of range(%d): %r" % (k, p))
    members: list[tuple[int, ...]] = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        p = queue.pop()
        for q in perms:
            r = tuple(p[q[i]] for i in range(k))
            if r not in index:
                if len(members) >= max_order:
                    raise BudgetError("closure exceeded %d elements" % max_order)
                index[r] = len(members)
                members.append(r)
                queue.append(r)
    n = len(members)
    mul = tuple(
        tuple(index[tuple(a[b[i]] for i in range(k))] for b in members) for a in members
    )
    gens = tuple(sorted({index[p] for p in perms} - {0}))
    return FiniteGroupTable(mul, gens=gens, name=name)


def cyclic_table(n: int, name: str = "") -> FiniteGroupTable:
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    gens = (1,) if n > 1 else ()
    return FiniteGroupTable(mul, gens=gens, name=name or "C%d" % n)


def direct_product(g: FiniteGroupTable, h: FiniteGroupTable, name: str = "") -> FiniteGroupTable:
    n, m = g.order, h.order
    def idx(a: int, b: int) -> int:
        return a * m + b
    mul = tuple(
        tuple(idx(g.mul[a1][a2], h.mul[b1][b2]) for a2 in range(n) for b2 in range(m))
        for a1 in range(n) for b1 in range(m)
    )
    return FiniteGroupTable(mul, name=name)
