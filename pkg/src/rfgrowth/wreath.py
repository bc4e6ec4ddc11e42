"""Lamplighter (restricted wreath) elements and detection-floor kernels.

An element is a finitely supported lamp configuration over Z or Z/p
together with a shift.  Convention: multiplying on the right by the
shift generator t moves the lamp configuration one step to the right,
i.e. t * (lamp at 0) * t^-1 = lamp at +1.  With (f, s) * (g, u) =
(f + g(. - s), s + u) this is forced, and it is the convention every
routine below (word length, homomorphic images, collapse sums) assumes.

The arithmetic-progression matrix encodes, for each modulus r <= n and
each phase, the sum of lamp coefficients along that progression; a
kernel vector of the matrix gives a lamp configuration invisible to
every quotient whose shift image has small conjugation period.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .errors import KernelBoundError


@dataclass(frozen=True)
class WreathElement:
    """Lamps over Z/p (modulus p >= 2) or Z (modulus 0), plus a shift."""

    modulus: int
    lamps: tuple[tuple[int, int], ...]  # sorted (position, nonzero coefficient)
    shift: int

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError("modulus must be 0 (integer lamps) or >= 2")
        clean = {}
        for pos, coeff in self.lamps:
            if self.modulus:
                coeff %= self.modulus
            coeff += clean.get(pos, 0)
            if self.modulus:
                coeff %= self.modulus
            clean[pos] = coeff
        normal = tuple(sorted((p, c) for p, c in clean.items() if c))
        if normal != self.lamps:
            object.__setattr__(self, "lamps", normal)

    @classmethod
    def identity(cls, modulus: int) -> "WreathElement":
        return cls(modulus, (), 0)

    @classmethod
    def lamp(cls, modulus: int, pos: int = 0, coeff: int = 1) -> "WreathElement":
        return cls(modulus, ((pos, coeff),), 0)

    @classmethod
    def shift_gen(cls, modulus: int, amount: int = 1) -> "WreathElement":
        return cls(modulus, (), amount)

    def is_identity(self) -> bool:
        return not self.lamps and self.shift == 0

    def lamp_dict(self) -> dict[int, int]:
        return dict(self.lamps)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if other.modulus != self.modulus:
            raise ValueError("mixed lamp moduli")
        merged = self.lamp_dict()
        for pos, coeff in other.lamps:
            merged[pos + self.shift] = merged.get(pos + self.shift, 0) + coeff
        return WreathElement(self.modulus, tuple(merged.items()), self.shift + other.shift)

    def inverse(self) -> "WreathElement":
        moved = tuple((pos - self.shift, -coeff) for pos, coeff in self.lamps)
        return WreathElement(self.modulus, moved, -self.shift)

    def __pow__(self, n: int) -> "WreathElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = WreathElement.identity(self.modulus)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self) -> str:
        lamps = " ".join("%d@%d" % (c, p) for p, c in self.lamps) or "-"
        return "lamps[%s] shift %d" % (lamps, self.shift)


def lamp_cost(coeff: int, modulus: int) -> int:
    """Generator presses to set one lamp: |c|, or the cheaper direction mod p."""
    if modulus == 0:
        return abs(coeff)
    coeff %= modulus
    return min(coeff, modulus - coeff)


def wreath_word_length(e: WreathElement) -> int:
    """Exact word length over {lamp generator, shift generator} inverses included.

    Lamp presses are independent of the walk, so the length is the sum
    of per-lamp costs plus the shortest walk on Z from 0 to the final
    shift visiting every support position, minimized over covering the
    left excursion first or the right excursion first.
    """
    presses = sum(lamp_cost(c, e.modulus) for _, c in e.lamps)
    positions = [p for p, _ in e.lamps]
    if not positions:
        return presses + abs(e.shift)
    lo = min(positions + [0, e.shift])
    hi = max(positions + [0, e.shift])
    left_first = (0 - lo) + (hi - lo) + (hi - e.shift)
    right_first = (hi - 0) + (hi - lo) + (e.shift - lo)
    return presses + min(left_first, right_first)


def build_ap_matrix(n: int) -> np.ndarray:
    """0/1 matrix, one row per (modulus r <= n, phase), over 2m columns.

    m = n(n+1)/2.  Row (r, phi) marks the columns j with j = phi mod r;
    rows are ordered by modulus then by phase of first marked column.
    """
    if n < 1:
        raise ValueError("n must be >= 1, got %d" % n)
    m = n * (n + 1) // 2
    cols = np.arange(2 * m)
    rows = [(cols % r == phi).astype(np.int64) for r in range(1, n + 1) for phi in range(r)]
    return np.array(rows, dtype=np.int64)


@dataclass(frozen=True)
class KernelCandidate:
    """A nonzero lamp vector annihilated by the progression matrix."""

    n: int
    modulus: int  # 0 for the integer case
    vector: tuple[int, ...]  # length 2m, entries already reduced

    def __post_init__(self) -> None:
        if not any(self.vector):
            raise KernelBoundError("kernel candidate is the zero vector")

    def element(self) -> WreathElement:
        lamps = tuple((pos, c) for pos, c in enumerate(self.vector) if c)
        return WreathElement(self.modulus or 0, lamps, 0)

    @property
    def m(self) -> int:
        return self.n * (self.n + 1) // 2


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def kernel_mod_p(matrix: np.ndarray, p: int, n: int) -> KernelCandidate:
    """One nonzero mod-p kernel vector, by deterministic elimination."""
    if not is_prime(p):
        raise ValueError("lamp modulus must be prime, got %d" % p)
    rows, cols = matrix.shape
    work = [[int(x) % p for x in row] for row in matrix]
    pivot_of_col: dict[int, int] = {}
    rank = 0
    for col in range(cols):
        pivot_row = None
        for r in range(rank, rows):
            if work[r][col] % p:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = pow(work[rank][col], -1, p)
        work[rank] = [(x * inv) % p for x in work[rank]]
        for r in range(rows):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [(a - factor * b) % p for a, b in zip(work[r], work[rank])]
        pivot_of_col[col] = rank
        rank += 1
    free_cols = [c for c in range(cols) if c not in pivot_of_col]
    if not free_cols:
        raise KernelBoundError("progression matrix has full column rank mod %d" % p)
    free = free_cols[0]
    vec = [0] * cols
    vec[free] = 1
    for col, prow in pivot_of_col.items():
        vec[col] = (-work[prow][free]) % p
    assert all(sum(int(a) * v for a, v in zip(row, vec)) % p == 0 for row in matrix)
    return KernelCandidate(n, p, tuple(vec))


def integer_kernel_basis(matrix: np.ndarray) -> list[list[int]]:
    """Basis of the integer kernel lattice, by row reduction of [M^T | I]."""
    rows, cols = matrix.shape
    aug = [[int(matrix[r][c]) for r in range(rows)] + [int(i == c) for i in range(cols)]
           for c in range(cols)]
    pivot_row = 0
    for col in range(rows):
        while True:
            live = [r for r in range(pivot_row, cols) if aug[r][col]]
            if not live:
                break
            best = min(live, key=lambda r: abs(aug[r][col]))
            aug[pivot_row], aug[best] = aug[best], aug[pivot_row]
            done = True
            for r in range(pivot_row + 1, cols):
                if aug[r][col]:
                    q = aug[r][col] // aug[pivot_row][col]
                    aug[r] = [a - q * b for a, b in zip(aug[r], aug[pivot_row])]
                    if aug[r][col]:
                        done = False
            if done:
                pivot_row += 1
                break
    basis = [row[rows:] for row in aug[pivot_row:] if not any(row[:rows])]
    # rows below pivot_row all have zero left part by construction
    assert len(basis) == cols - pivot_row
    return basis


def small_integer_kernel(matrix: np.ndarray, n: int, bound: int | None = None) -> KernelCandidate:
    """Nonzero integer kernel vector with sup-norm <= m + 2 (pigeonhole bound).

    Basis vectors are tried first, then signed combinations of up to
    three of them; a violated bound raises, it is never papered over.
    """
    m = n * (n + 1) // 2
    if bound is None:
        bound = m + 2
    basis = integer_kernel_basis(matrix)
    if not basis:
        raise KernelBoundError("integer kernel is trivial")

    def fits(vec: list[int]) -> bool:
        return any(vec) and max(abs(x) for x in vec) <= bound

    for vec in basis:
        if fits(vec):
            return KernelCandidate(n, 0, tuple(vec))
    size = len(basis[0])
    for take in (2, 3):
        for rows_ in combinations(basis, take):
            for signs in product((1, -1), repeat=take):
                vec = [sum(s * r[i] for s, r in zip(signs, rows_)) for i in range(size)]
                if fits(vec):
                    return KernelCandidate(n, 0, tuple(vec))
    raise KernelBoundError("no kernel vector within sup-norm %d found" % bound)


def ap_collapse(candidate: KernelCandidate | WreathElement, r: int) -> tuple[int, ...]:
    """Per-phase sums of lamp coefficients along progressions of modulus r."""
    if r < 1:
        raise ValueError("modulus r must be >= 1")
    if isinstance(candidate, KernelCandidate):
        lamps = [(pos, c) for pos, c in enumerate(candidate.vector) if c]
        modulus = candidate.modulus
    else:
        lamps = list(candidate.lamps)
        modulus = candidate.modulus
    sums = [0] * r
    for pos, coeff in lamps:
        sums[pos % r] += coeff
    if modulus:
        sums = [s % modulus for s in sums]
    return tuple(sums)
