"""Independent oracles used only by the tests.

Everything here re-derives values through a different algorithm than the
package uses: group enumeration by regular-permutation closure instead
of cyclic extensions, isomorphism by generator-image backtracking
written from scratch, abelian counts from the partition function.  The
point is to have two routes to every load-bearing number.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations


def compose(f: tuple, g: tuple) -> tuple:
    return tuple(f[x] for x in g)


def prime_divisors(n: int) -> list[int]:
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


def divisors_gt1(n: int) -> list[int]:
    return [d for d in range(2, n + 1) if n % d == 0]


def uniform_cycle_perms(n: int, d: int, first_image: int, forbidden=None):
    """All permutations q of {0..n-1} whose cycles all have length d and
    which map 0 to first_image, skipping any q with q(x) in forbidden[x].
    Generated cycle by cycle, smallest unplaced point first, so the
    output order is deterministic.

    The forbidden sets implement a necessary condition for q to extend a
    partial regular group H: for every h in H the products qh and hq
    must be fixed-point-free, which forces q(x) != h^-1(x) for all x.
    """
    if n % d != 0:
        return
    if forbidden is None:
        forbidden = [{x} for x in range(n)]
    if d == 1:
        if first_image == 0 and not any(x in forbidden[x] for x in range(n)):
            yield tuple(range(n))
        return

    perm = [None] * n

    def close_cycle(cyc: list, placed: set):
        for i in range(d):
            perm[cyc[i]] = cyc[(i + 1) % d]
        yield from fill(placed | set(cyc))
        for c in cyc:
            perm[c] = None

    def grow_cycle(cyc: list, placed: set):
        if len(cyc) == d:
            if cyc[0] not in forbidden[cyc[-1]]:
                yield from close_cycle(cyc, placed)
            return
        pool = (
            (first_image,)
            if cyc == [0] and first_image is not None
            else sorted(set(range(n)) - placed - set(cyc))
        )
        for y in pool:
            if y in forbidden[cyc[-1]] or y in placed or y in cyc:
                continue
            yield from grow_cycle(cyc + [y], placed)

    def fill(placed: set):
        if len(placed) == n:
            yield tuple(perm)
            return
        start = min(set(range(n)) - placed)
        yield from grow_cycle([start], placed)

    yield from fill(set())


def perm_closure_bounded(gens, n: int):
    """Closure of gens under composition, or None if the closure cannot
    sit inside a regular group of order n (a non-identity element fixes
    a point, or the closure grows past n)."""
    ident = tuple(range(n))
    elems = {ident}
    work = []
    for g in gens:
        if g not in elems:
            if any(g[i] == i for i in range(n)):
                return None
            elems.add(g)
            work.append(g)
    while work:
        g = work.pop()
        for h in list(elems):
            for prod in (compose(g, h), compose(h, g)):
                if prod in elems:
                    continue
                if any(prod[i] == i for i in range(n)):
                    return None
                if len(elems) >= n:
                    return None
                elems.add(prod)
                work.append(prod)
    return elems


def _table_from_regular(elems, n: int):
    by_point = {}
    for h in elems:
        by_point[h[0]] = h
    return tuple(tuple(by_point[a][b] for b in range(n)) for a in range(n))


def _canonical_uniform_perm(n: int, d: int) -> tuple:
    root = [None] * n
    for c in range(n // d):
        block = list(range(c * d, (c + 1) * d))
        for i in range(d):
            root[block[i]] = block[(i + 1) % d]
    return tuple(root)


def regular_group_tables(n: int) -> list:
    """Every group of order n, as a multiplication table with identity 0,
    one table per isomorphism class.

    Method: a group of order n acts on itself regularly, so it embeds in
    S_n with every non-identity element fixed-point-free and uniform-cycled.
    By Cauchy any such group contains an element of order p for the
    largest prime p dividing n, and conjugating in S_n (which preserves
    the isomorphism class) moves it onto the canonical uniform p-cycle
    permutation.  Seed the search there, then repeatedly adjoin candidate
    elements sending 0 to the smallest point outside the current orbit;
    only proper-divisor cycle lengths are needed because an element of
    order n forces the cyclic group, emitted directly.  Deduplicate by
    isomorphism at the end.
    """
    if n == 1:
        return [((0,),)]
    found = [_table_from_regular(perm_closure_bounded([_canonical_uniform_perm(n, n)], n), n)]

    def extend(elems):
        if len(elems) == n:
            table = _table_from_regular(elems, n)
            for other in found:
                if tables_isomorphic(table, other):
                    return
            found.append(table)
            return
        orbit = {p[0] for p in elems}
        t0 = min(set(range(n)) - orbit)
        forbidden = [{h.index(x) for h in elems} for x in range(n)]
        for d in divisors_gt1(n):
            if d == n:
                continue
            for q in uniform_cycle_perms(n, d, t0, forbidden):
                closed = perm_closure_bounded(list(elems) + [q], n)
                if closed is not None and n % len(closed) == 0:
                    extend(closed)

    p = max(prime_divisors(n))
    if p < n:
        closed = perm_closure_bounded([_canonical_uniform_perm(n, p)], n)
        assert closed is not None
        extend(closed)
    return found


def table_element_orders(table) -> list[int]:
    n = len(table)
    orders = []
    for g in range(n):
        k, x = 1, g
        while x != 0:
            x = table[x][g]
            k += 1
        orders.append(k)
    return orders


def _generated(table, gens) -> set:
    reached = {0}
    work = [0]
    while work:
        a = work.pop()
        for g in gens:
            b = table[a][g]
            if b not in reached:
                reached.add(b)
                work.append(b)
    return reached


def small_generating_tuple(table) -> tuple:
    n = len(table)
    if n == 1:
        return ()
    for size in range(1, n.bit_length()):
        for gens in combinations(range(1, n), size):
            if len(_generated(table, gens)) == n:
                return gens
    raise AssertionError("no generating tuple found")


def tables_isomorphic(t1, t2) -> bool:
    """Generator-image backtracking, independent of the package's
    isomorphism search."""
    n = len(t1)
    if len(t2) != n:
        return False
    o1, o2 = table_element_orders(t1), table_element_orders(t2)
    if sorted(o1) != sorted(o2):
        return False
    gens = small_generating_tuple(t1)
    if not gens:
        return True
    pools = [[h for h in range(n) if o2[h] == o1[g]] for g in gens]

    def try_images(images) -> bool:
        fmap = {0: 0}
        work = [0]
        gen_img = dict(zip(gens, images))
        for g, h in gen_img.items():
            if fmap.get(g, h) != h:
                return False
            fmap[g] = h
        work.extend(g for g in gens if g != 0)
        while work:
            a = work.pop()
            for g, h in gen_img.items():
                b = t1[a][g]
                fb = t2[fmap[a]][h]
                if b in fmap:
                    if fmap[b] != fb:
                        return False
                else:
                    fmap[b] = fb
                    work.append(b)
        if len(fmap) != n:
            return False
        return len(set(fmap.values())) == n

    def backtrack(i: int, chosen) -> bool:
        if i == len(pools):
            return try_images(chosen)
        for h in pools[i]:
            if backtrack(i + 1, chosen + (h,)):
                return True
        return False

    return backtrack(0, ())


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """Number of integer partitions of k (Euler recurrence)."""
    if k == 0:
        return 1
    total, j = 0, 1
    while True:
        for pent in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if pent > k:
                if pent == j * (3 * j - 1) // 2:
                    continue
                return total
            total += (1 if j % 2 else -1) * partition_count(k - pent)
        j += 1


def abelian_group_count(n: int) -> int:
    """Number of abelian groups of order n: product of p(e_i) over the
    prime factorization exponents."""
    count = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            count *= partition_count(e)
        d += 1
    if n > 1:
        count *= partition_count(1)
    return count
