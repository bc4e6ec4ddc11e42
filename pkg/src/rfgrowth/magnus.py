"""Degree-truncated expansion of free-group words.

Each generator x_i maps to 1 + X_i in the free associative algebra over
the integers, truncated above a degree cap; an inverse letter maps to
the alternating geometric series 1 - X_i + X_i^2 - ...  Coefficients
are exact (Python ints), so a nonzero low-degree term is a certificate:
if the lowest nonzero degree of expand(w) - 1 is k, then w lies in the
k-th term of the lower central series and not the (k+1)-st.  With the
series indexed from Gamma_0 = Gamma, depth k certifies membership in
Gamma_{k-1} minus Gamma_k.

All-zero through the cap is reported as "depth >= cap + 1 unknown",
never as a number.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetError
from .words import FREE2, Word, commutator, generator

Monomial = tuple[int, ...]

DEFAULT_CAP_BUDGET = 10
DEFAULT_RANK_LIMIT = 2
DEFAULT_WORD_BUDGET = 6


class TruncatedSeries:
    """Integer series in noncommuting variables, degree-truncated."""

    __slots__ = ("cap", "rank", "terms")

    def __init__(self, cap: int, rank: int, terms: dict[Monomial, int] | None = None):
        self.cap = cap
        self.rank = rank
        self.terms: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff and len(mono) <= cap:
                    self.terms[mono] = coeff

    @classmethod
    def one(cls, cap: int, rank: int) -> "TruncatedSeries":
        return cls(cap, rank, {(): 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.cap, self.rank, self.terms) == (other.cap, other.rank, other.terms)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, 0) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return TruncatedSeries(self.cap, self.rank, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.cap, self.rank, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = self.cap
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            room = cap - len(m1)
            for m2, c2 in other.terms.items():
                if len(m2) > room:
                    continue
                mono = m1 + m2
                new = out.get(mono, 0) + c1 * c2
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        return TruncatedSeries(cap, self.rank, out)

    def homogeneous(self, degree: int) -> dict[Monomial, int]:
        return {m: c for m, c in self.terms.items() if len(m) == degree}

    def lowest_degree(self) -> int | None:
        """Lowest nonzero degree >= 1, or None if 1 is the whole series."""
        degrees = [len(m) for m in self.terms if m]
        return min(degrees) if degrees else None

    def __repr__(self) -> str:
        if not self.terms:
            return "TruncatedSeries(0)"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            name = "*".join("X%d" % (i + 1) for i in mono) or "1"
            bits.append("%+d%s" % (self.terms[mono], "" if mono == () else "*" + name))
        return "TruncatedSeries(%s)" % " ".join(bits)


def _letter_series(gen: int, sign: int, cap: int, rank: int) -> TruncatedSeries:
    if sign == 1:
        return TruncatedSeries(cap, rank, {(): 1, (gen,): 1})
    # (1 + X)^-1 truncated: the tail beyond the cap only feeds degrees
    # above the cap, so the truncation is exact for our purposes.
    terms = {tuple([gen] * k): (-1) ** k for k in range(cap + 1)}
    return TruncatedSeries(cap, rank, terms)


def expand(w: Word, cap: int, rank_limit: int = DEFAULT_RANK_LIMIT,
           cap_budget: int = DEFAULT_CAP_BUDGET) -> TruncatedSeries:
    """Expansion of w with all coefficients through degree `cap` exact."""
    if cap < 1:
        raise ValueError("cap must be >= 1, got %d" % cap)
    if cap > cap_budget:
        raise BudgetError("cap %d exceeds budget %d" % (cap, cap_budget))
    rank = w.alphabet.rank
    if rank > rank_limit:
        raise BudgetError("alphabet rank %d exceeds limit %d" % (rank, rank_limit))
    out = TruncatedSeries.one(cap, rank)
    for gen, sign in w:
        out = out * _letter_series(gen, sign, cap, rank)
    return out


@dataclass(frozen=True)
class DepthReport:
    word_text: str
    cap: int
    depth: int | None  # None: all of degrees 1..cap vanish
    leading: dict[Monomial, int] = field(default_factory=dict, compare=False)

    @property
    def certified_nontrivial(self) -> bool:
        return self.depth is not None

    def describe(self) -> str:
        if self.depth is None:
            return "depth >= %d (inconclusive at cap %d)" % (self.cap + 1, self.cap)
        return "depth %d" % self.depth


def lcs_depth(w: Word, cap: int, **limits) -> DepthReport:
    """Lowest nonzero degree of expand(w) - 1, or None through the cap."""
    series = expand(w, cap, **limits)
    depth = series.lowest_degree()
    leading = series.homogeneous(depth) if depth is not None else {}
    return DepthReport(str(w), cap, depth, leading)


def doubling_word(n: int, budget: int = DEFAULT_WORD_BUDGET) -> Word:
    """n-th member of the iterated-commutator family on two generators.

    The base word is x^-2 y^-1 x; each successor is the commutator of
    the x- and y-conjugates of its predecessor, so lower-central depth
    at least doubles at every step.
    """
    if n < 1:
        raise ValueError("n must be >= 1, got %d" % n)
    if n > budget:
        raise BudgetError("n %d exceeds word budget %d" % (n, budget))
    x = generator(FREE2, 0)
    y = generator(FREE2, 1)
    u = (x ** -2) * (y ** -1) * x
    for _ in range(n - 1):
        u = commutator(x * u * ~x, y * u * ~y)
    return u


@dataclass(frozen=True)
class DoublingReport:
    reports: tuple[DepthReport, ...]
    pair_ok: tuple[bool | None, ...]  # entry i: depth(u_{i+2}) >= 2*depth(u_{i+1})
    outcome: str  # "pass" | "fail" | "inconclusive"

    def depths(self) -> tuple[int | None, ...]:
        return tuple(r.depth for r in self.reports)


def depth_doubling_check(n_max: int, cap: int = 8, **limits) -> DoublingReport:
    """Measure depths of the doubling words and check each adjacent pair.

    A word whose expansion vanishes through the cap still *passes* its
    pair when cap + 1 >= 2 * (previous depth); it only goes
    inconclusive when the cap is too small to decide.
    """
    reports = [lcs_depth(doubling_word(n), cap, **limits) for n in range(1, n_max + 1)]
    pair_ok: list[bool | None] = []
    outcome = "pass"
    for prev, nxt in zip(reports, reports[1:]):
        if prev.depth is None:
            pair_ok.append(None)
            if outcome != "fail":
                outcome = "inconclusive"
        elif nxt.depth is not None:
            ok = nxt.depth >= 2 * prev.depth
            pair_ok.append(ok)
            if not ok:
                outcome = "fail"
        elif cap + 1 >= 2 * prev.depth:
            pair_ok.append(True)
        else:
            pair_ok.append(None)
            if outcome != "fail":
                outcome = "inconclusive"
    return DoublingReport(tuple(reports), tuple(pair_ok), outcome)
