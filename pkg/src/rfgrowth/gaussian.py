"""Exact Gaussian-integer matrices and their residue reductions mod 2^k.

Everything here is integer arithmetic: GaussInt is a re/im pair of
Python ints, GaussMat2 a 2x2 matrix of them.  The congruence machinery
reduces matrices modulo the ideal (1-i) (a half step; the residue ring
is the field with two elements via re+im mod 2, and (1+i) = i(1-i)
generates the same ideal) or modulo 2^k, optionally identifying M with
-M.  On top of that sit:

* g_level: the first modulus 2^k at which a matrix stops being
  projectively trivial,
* kernel_2group_check: exhaustive enumeration of the finite kernel
  between the mod-2^k and mod-(1-i) reductions,
* nil_detect_upper: the level-based detection bound together with the
  entry-size mechanism behind it (some entry of A-1 or A+1 has s-norm
  at least 2^(k-1); the exponent k-1 is pinned by enumeration, see
  snorm_mechanism),
* entry_growth_probe: sampled certificates that entries of length-n
  products grow no faster than (2*beta)^n,
* the Hermitian circle 2|z|^2 + (1+i)z + (1-i)zbar - 2 = 0 with its
  Moebius transform rule, and the four fixed SL2(Z[i]) generators whose
  mod-(1+i) reduction the test suite pins down.

Circle convention: a circle (a, B, c) is the matrix H = [[a, B],
[conj(B), c]] acting as (z, 1) H (conj(z), 1)^T = 0, and a Moebius map
g sends H to transpose(inverse(g)) * H * conj(inverse(g)).  The float
sampling test validates this orientation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import BudgetError, KernelBoundError

DEFAULT_LEVEL_CAP = 8
DEFAULT_KERNEL_BUDGET = 2


@dataclass(frozen=True)
class GaussInt:
    """A Gaussian integer re + im*i with exact arithmetic."""

    re: int = 0
    im: int = 0

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def s_norm(self) -> int:
        """Word norm over the additive generators {1, i}: |re| + |im|."""
        return abs(self.re) + abs(self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def mod_pow2(self, k: int) -> "GaussInt":
        m = 1 << k
        return GaussInt(self.re % m, self.im % m)

    def mod_half(self) -> int:
        """Residue modulo the ideal (1-i): the field of two elements."""
        return (self.re + self.im) % 2

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im_part = "i" if abs(self.im) == 1 else "%di" % abs(self.im)
        if self.re == 0:
            return ("-" if self.im < 0 else "") + im_part
        return "%d%s%s" % (self.re, "+" if self.im > 0 else "-", im_part)


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I_UNIT = GaussInt(0, 1)


def gi(re: int, im: int = 0) -> GaussInt:
    return GaussInt(re, im)


def s_norm(a: GaussInt) -> int:
    return a.s_norm()


def divides(d: GaussInt, a: GaussInt) -> bool:
    """Exact divisibility in the Gaussian integers."""
    n = d.norm()
    if n == 0:
        return a.is_zero()
    q = a * d.conjugate()
    return q.re % n == 0 and q.im % n == 0


# -- parsing / printing -----------------------------------------------------------


def parse_gauss(text: str) -> GaussInt:
    """Parse '(re,im)' pairs and plain forms like '3', 'i', '1+2i', '-1-i'."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        parts = text[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError("expected (re,im), got %r" % text)
        return GaussInt(int(parts[0]), int(parts[1]))
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise ValueError("empty Gaussian integer")
    # split into at most two signed terms
    terms: list[str] = []
    current = ""
    for ch in cleaned:
        if ch in "+-" and current and current[-1] not in "+-":
            terms.append(current)
            current = ch
        else:
            current += ch
    terms.append(current)
    re_part, im_part = 0, 0
    for term in terms:
        if term in ("i", "+i"):
            im_part += 1
        elif term == "-i":
            im_part -= 1
        elif term.endswith("i"):
            im_part += int(term[:-1])
        else:
            re_part += int(term)
    return GaussInt(re_part, im_part)


@dataclass(frozen=True)
class GaussMat2:
    """2x2 matrix over the Gaussian integers; the determinant is computed
    once at construction and re-derivable from the entries."""

    a: GaussInt
    b: GaussInt
    c: GaussInt
    d: GaussInt
    det: GaussInt = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "det", self.a * self.d - self.b * self.c)

    @classmethod
    def identity(cls) -> "GaussMat2":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def from_ints(cls, rows) -> "GaussMat2":
        (a, b), (c, d) = rows
        return cls(gi(*a), gi(*b), gi(*c), gi(*d))

    @property
    def entries(self) -> tuple[GaussInt, GaussInt, GaussInt, GaussInt]:
        return (self.a, self.b, self.c, self.d)

    def recomputed_det(self) -> GaussInt:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "GaussMat2") -> "GaussMat2":
        return GaussMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "GaussMat2":
        return GaussMat2(-self.a, -self.b, -self.c, -self.d)

    def __add__(self, other: "GaussMat2") -> "GaussMat2":
        return GaussMat2(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other: "GaussMat2") -> "GaussMat2":
        return GaussMat2(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def transpose(self) -> "GaussMat2":
        return GaussMat2(self.a, self.c, self.b, self.d)

    def conj(self) -> "GaussMat2":
        return GaussMat2(
            self.a.conjugate(), self.b.conjugate(), self.c.conjugate(), self.d.conjugate()
        )

    def inverse(self) -> "GaussMat2":
        if self.det == ONE:
            return GaussMat2(self.d, -self.b, -self.c, self.a)
        if self.det == -ONE:
            return GaussMat2(-self.d, self.b, self.c, -self.a)
        raise ValueError("inverse needs determinant +-1, got %s" % self.det)

    def __pow__(self, k: int) -> "GaussMat2":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = GaussMat2.identity()
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def max_entry_snorm(self) -> int:
        return max(e.s_norm() for e in self.entries)

    def __str__(self) -> str:
        return "[[%s,%s],[%s,%s]]" % (
            "(%d,%d)" % (self.a.re, self.a.im),
            "(%d,%d)" % (self.b.re, self.b.im),
            "(%d,%d)" % (self.c.re, self.c.im),
            "(%d,%d)" % (self.d.re, self.d.im),
        )


def parse_gauss_matrix(text: str) -> GaussMat2:
    """Parse the bracketed pair format [[(re,im),(re,im)],[(re,im),(re,im)]]."""
    cleaned = text.replace(" ", "")
    if not (cleaned.startswith("[[") and cleaned.endswith("]]")):
        raise ValueError("expected [[..],[..]] matrix, got %r" % text)
    body = cleaned[2:-2]
    rows = body.split("],[")
    if len(rows) != 2:
        raise ValueError("expected two rows in %r" % text)
    entries: list[GaussInt] = []
    for row in rows:
        # entries look like (re,im),(re,im)
        parts = row.replace("),(", ")|(").split("|")
        if len(parts) != 2:
            raise ValueError("expected two entries per row in %r" % text)
        for part in parts:
            entries.append(parse_gauss(part))
    return GaussMat2(*entries)


# -- residue reductions -----------------------------------------------------------


@dataclass(frozen=True)
class ResidueMat2:
    """A 2x2 matrix over a residue ring of the Gaussian integers.

    k = 0 means the half-step ideal (1-i), whose residue ring is the
    two-element field (entries stored as 0/1 with zero imaginary part);
    k >= 1 means the ring mod 2^k.  With projective=True the matrix is
    identified with its negative by storing the lexicographically
    smaller of the two."""

    k: int
    projective: bool
    entries: tuple[GaussInt, GaussInt, GaussInt, GaussInt]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be >= 0")
        reduced = tuple(self._reduce(e) for e in self.entries)
        if self.projective:
            negated = tuple(self._reduce(-e) for e in self.entries)
            if self._sort_key(negated) < self._sort_key(reduced):
                reduced = negated
        object.__setattr__(self, "entries", reduced)

    def _reduce(self, e: GaussInt) -> GaussInt:
        if self.k == 0:
            return GaussInt(e.mod_half(), 0)
        return e.mod_pow2(self.k)

    @staticmethod
    def _sort_key(entries) -> tuple:
        return tuple((e.re, e.im) for e in entries)

    @classmethod
    def from_matrix(cls, mat: GaussMat2, k: int, projective: bool = False) -> "ResidueMat2":
        return cls(k, projective, mat.entries)

    @classmethod
    def identity(cls, k: int, projective: bool = False) -> "ResidueMat2":
        return cls(k, projective, (ONE, ZERO, ZERO, ONE))

    def is_identity(self) -> bool:
        return self == self.identity(self.k, self.projective)

    def _compatible(self, other: "ResidueMat2") -> None:
        if self.k != other.k or self.projective != other.projective:
            raise ValueError("mixed residue rings")

    def __mul__(self, other: "ResidueMat2") -> "ResidueMat2":
        self._compatible(other)
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return ResidueMat2(
            self.k,
            self.projective,
            (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h),
        )

    def __add__(self, other: "ResidueMat2") -> "ResidueMat2":
        if self.projective:
            raise ValueError("addition is not defined projectively")
        self._compatible(other)
        return ResidueMat2(
            self.k,
            self.projective,
            tuple(x + y for x, y in zip(self.entries, other.entries)),
        )

    def order(self, budget: int = 1 << 20) -> int:
        acc = self
        count = 1
        while not acc.is_identity():
            acc = acc * self
            count += 1
            if count > budget:
                raise BudgetError("element order exceeds %d" % budget)
        return count

    def __str__(self) -> str:
        a, b, c, d = (str(e) for e in self.entries)
        tag = "(1-i)" if self.k == 0 else "2^%d" % self.k
        star = "/+-" if self.projective else ""
        return "[[%s,%s],[%s,%s]] mod %s%s" % (a, b, c, d, tag, star)


def in_delta(mat: GaussMat2) -> bool:
    """Is the matrix congruent to the identity modulo (1-i)?"""
    return ResidueMat2.from_matrix(mat, 0).is_identity()


def g_level(mat: GaussMat2, cap: int = DEFAULT_LEVEL_CAP) -> int | None:
    """Least k with the matrix not projectively congruent to 1 mod 2^k;
    0 when it is not congruent to 1 mod (1-i); None for 'at least cap'."""
    if mat.det != ONE:
        raise ValueError("level is defined for determinant 1, got %s" % mat.det)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if not in_delta(mat):
        return 0
    for k in range(1, cap + 1):
        if not ResidueMat2.from_matrix(mat, k, projective=True).is_identity():
            return k
    return None


def h_map(mat: GaussMat2) -> ResidueMat2:
    """(A - 1) reduced mod 2; additive in the sense h(AB) = h(A) + h(B)
    for matrices congruent to 1 mod (1-i)."""
    if not in_delta(mat):
        raise ValueError("h_map needs a matrix congruent to 1 mod (1-i)")
    return ResidueMat2.from_matrix(mat - GaussMat2.identity(), 1)


# -- the finite congruence kernel ---------------------------------------------------


@dataclass(frozen=True)
class KernelReport:
    k: int
    raw_order: int  # matrices mod 2^k, before identifying M with -M
    order: int  # after the identification
    is_two_group: bool
    bound: int  # 2^(8k)

    @property
    def within_bound(self) -> bool:
        return self.order <= self.bound

    def describe(self) -> str:
        return "level %d kernel: order %d (raw %d), 2-group=%s, bound 2^%d -> %s" % (
            self.k,
            self.order,
            self.raw_order,
            self.is_two_group,
            8 * self.k,
            "ok" if self.within_bound else "EXCEEDED",
        )


def _residue_ring(k: int) -> list[GaussInt]:
    m = 1 << k
    return [GaussInt(re, im) for re in range(m) for im in range(m)]


def kernel_2group_check(k: int, budget: int = DEFAULT_KERNEL_BUDGET) -> KernelReport:
    """Enumerate the kernel of SL2(Z[i]/2^k) -> SL2(Z[i]/(1-i)) modulo
    +-1 by direct scan of all matrices over the residue ring, and check
    it is a 2-group within the stated order bound."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > budget:
        raise BudgetError("kernel enumeration budget is k <= %d, got %d" % (budget, k))
    if k == 0:
        return KernelReport(0, 1, 1, True, 1)
    ring = _residue_ring(k)
    one = ONE.mod_pow2(k)
    members: list[ResidueMat2] = []
    for a in ring:
        for b in ring:
            for c in ring:
                for d in ring:
                    if (a * d - b * c).mod_pow2(k) != one:
                        continue
                    if (
                        a.mod_half() != 1
                        or d.mod_half() != 1
                        or b.mod_half() != 0
                        or c.mod_half() != 0
                    ):
                        continue
                    members.append(ResidueMat2(k, False, (a, b, c, d)))
    raw_order = len(members)
    projective = {ResidueMat2(k, True, m.entries) for m in members}
    order = len(projective)
    two_group = order & (order - 1) == 0 and order > 0
    # belt and braces: every element order must be a power of two
    for m in members:
        o = m.order(budget=1 << (3 * k + 2))
        if o & (o - 1):
            two_group = False
            break
    return KernelReport(k, raw_order, order, two_group, 1 << (8 * k))


# -- detection upper bounds ----------------------------------------------------------


@dataclass(frozen=True)
class NilDetectReport:
    level: int
    bound: int  # 2^(8*level)
    mechanism_snorm: int  # max s-norm over entries of A-1 and A+1
    mechanism_floor: int  # 2^(level-1)

    @property
    def mechanism_holds(self) -> bool:
        return self.mechanism_snorm >= self.mechanism_floor

    def describe(self) -> str:
        return "level %d, detecting 2-group of order <= 2^%d (entry s-norm %d >= %d)" % (
            self.level,
            8 * self.level,
            self.mechanism_snorm,
            self.mechanism_floor,
        )


def snorm_mechanism(mat: GaussMat2) -> int:
    """Max s-norm over the entries of A-1 and A+1, the quantity the
    level bound leans on."""
    ident = GaussMat2.identity()
    down = (mat - ident).entries
    up = (mat + ident).entries
    return max(e.s_norm() for e in down + up)


def nil_detect_upper(mat: GaussMat2, cap: int = DEFAULT_LEVEL_CAP) -> NilDetectReport:
    """Level k of the matrix plus the order bound 2^(8k) for a nilpotent
    (indeed 2-group) quotient detecting it; asserts the entry-size
    mechanism 2^(k-1) <= max s-norm(A-+1).

    The exponent is k-1, not the k a first reading might suggest: the
    witness 1 + 2^(k-1) E12 has level exactly k with every entry of A-1
    of s-norm 2^(k-1).  Enumeration over small matrices (see the test
    suite) confirms k-1 is tight.
    """
    if not in_delta(mat):
        raise ValueError("detection bound applies to matrices congruent to 1 mod (1-i)")
    if mat == GaussMat2.identity() or mat == -GaussMat2.identity():
        raise ValueError("projectively trivial matrix has nothing to detect")
    level = g_level(mat, cap)
    if level is None:
        raise BudgetError("level exceeds cap %d; raise the cap" % cap)
    report = NilDetectReport(
        level=level,
        bound=1 << (8 * level),
        mechanism_snorm=snorm_mechanism(mat),
        mechanism_floor=1 << (level - 1),
    )
    if not report.mechanism_holds:
        raise KernelBoundError(
            "entry mechanism failed at level %d: s-norm %d < %d"
            % (level, report.mechanism_snorm, report.mechanism_floor)
        )
    return report


def level_witness(k: int) -> GaussMat2:
    """A unipotent matrix of determinant 1 and level exactly k.

    For k >= 2 the off-diagonal entry is 2^(k-1), which meets the
    mechanism floor with equality.  At k = 1 the entry 2^0 = 1 is not
    divisible by (1-i), so the witness uses (1-i) itself instead.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return GaussMat2(ONE, gi(1, -1), ZERO, ONE)
    return GaussMat2(ONE, gi(1 << (k - 1)), ZERO, ONE)


# -- entry growth -------------------------------------------------------------------


@dataclass(frozen=True)
class ProbeReport:
    n: int
    trials: int
    beta: int
    max_snorm: int
    bound: int  # (2*beta)^n

    @property
    def within_bound(self) -> bool:
        return self.max_snorm <= self.bound

    def describe(self) -> str:
        return "length %d, %d trials: max entry s-norm %d vs (2*%d)^%d = %d -> %s" % (
            self.n,
            self.trials,
            self.max_snorm,
            self.beta,
            self.n,
            self.bound,
            "ok" if self.within_bound else "EXCEEDED",
        )


def entry_growth_probe(
    generators,
    n: int,
    trials: int = 100,
    seed: int = 0,
    include_inverses: bool = False,
) -> ProbeReport:
    """Sample length-n products of the generators and compare the largest
    entry s-norm against (2*beta)^n with beta the generators' largest
    entry s-norm.  Exact arithmetic; the bound is a certificate for the
    sampled words only."""
    if n < 1:
        raise ValueError("length must be >= 1")
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    if include_inverses:
        gens = gens + [g.inverse() for g in gens]
    beta = max(g.max_entry_snorm() for g in gens)
    rng = random.Random(seed)
    worst = 0
    for _ in range(trials):
        acc = rng.choice(gens)
        for _ in range(n - 1):
            acc = acc * rng.choice(gens)
        worst = max(worst, acc.max_entry_snorm())
    return ProbeReport(n=n, trials=trials, beta=beta, max_snorm=worst, bound=(2 * beta) ** n)


# -- the Hermitian circle -------------------------------------------------------------


@dataclass(frozen=True)
class HermitianCircle:
    """Circle a|z|^2 + Bz + conj(B)conj(z) + c = 0 as the Hermitian matrix
    H = [[a, B],[conj(B), c]]; genuine circles have det(H) < 0."""

    a: int
    c: int
    B: GaussInt

    def __post_init__(self) -> None:
        if self.discriminant() >= 0:
            raise ValueError(
                "degenerate circle: a*c - |B|^2 = %d is not negative" % self.discriminant()
            )

    def discriminant(self) -> int:
        return self.a * self.c - self.B.norm()

    def matrix(self) -> GaussMat2:
        return GaussMat2(gi(self.a), self.B, self.B.conjugate(), gi(self.c))

    def negate(self) -> "HermitianCircle":
        return HermitianCircle(-self.a, -self.c, -self.B)

    def evaluate(self, x: float, y: float) -> float:
        """The defining form at z = x + iy (floats; zero on the circle)."""
        bz_re = self.B.re * x - self.B.im * y  # real part of B*z
        return self.a * (x * x + y * y) + 2.0 * bz_re + self.c

    def points(self, count: int = 8) -> list[tuple[float, float]]:
        """Float sample points on the circle (for convention validation)."""
        import math

        cx = -self.B.re / self.a
        cy = self.B.im / self.a
        r2 = (self.B.norm() - self.a * self.c) / (self.a * self.a)
        r = math.sqrt(r2)
        return [
            (cx + r * math.cos(2 * math.pi * t / count), cy + r * math.sin(2 * math.pi * t / count))
            for t in range(count)
        ]

    def transform(self, g: GaussMat2) -> "HermitianCircle":
        """The circle's image under the Moebius action of g."""
        m = g.inverse()
        h2 = m.transpose() * self.matrix() * m.conj()
        if h2.a.im or h2.d.im or h2.b != h2.c.conjugate():
            raise KernelBoundError("transformed circle matrix is not Hermitian")
        return HermitianCircle(h2.a.re, h2.d.re, h2.b)


def circle_preserved(g: GaussMat2, circle: HermitianCircle) -> int | None:
    """+1 or -1 when g maps the circle matrix to +-itself, else None."""
    if g.det != ONE:
        raise ValueError("expected determinant 1, got %s" % g.det)
    moved = circle.transform(g)
    if moved == circle:
        return 1
    if moved == circle.negate():
        return -1
    return None


# -- fixed instances ---------------------------------------------------------------------

CIRCLE = HermitianCircle(2, -2, gi(1, 1))

X1 = GaussMat2(gi(0, 1), gi(1, 1), gi(0, 0), gi(0, -1))
X2 = GaussMat2(gi(-1, 2), gi(3, 1), gi(1, 1), gi(1, -2))
X3 = GaussMat2(gi(0, 2), gi(3, 2), gi(1, 0), gi(1, -2))
X4 = GaussMat2(gi(1, 2), gi(2, 3), gi(0, -1), gi(0, -2))
STABILIZER_GENERATORS = (X1, X2, X3, X4)


@dataclass(frozen=True)
class FuchsianReport:
    dets_ok: bool
    first_pair_trivial: bool  # x1, x2 reduce to the identity mod (1-i)
    x3_image: tuple[int, int, int, int]
    x4_image: tuple[int, int, int, int]
    x3_expected: bool
    x4_expected: bool
    image_order: int
    image_cyclic: bool
    circle_lambdas: tuple[int | None, int | None, int | None, int | None]

    @property
    def passed(self) -> bool:
        return (
            self.dets_ok
            and self.first_pair_trivial
            and self.x3_expected
            and self.x4_expected
            and self.image_order == 3
            and self.image_cyclic
            and all(lam in (1, -1) for lam in self.circle_lambdas)
        )

    def describe(self) -> str:
        return (
            "dets=%s, x1/x2 trivial=%s, x3->%s (%s), x4->%s (%s), "
            "image order %d cyclic=%s, circle lambdas %s"
            % (
                self.dets_ok,
                self.first_pair_trivial,
                list(self.x3_image),
                "ok" if self.x3_expected else "WRONG",
                list(self.x4_image),
                "ok" if self.x4_expected else "WRONG",
                self.image_order,
                self.image_cyclic,
                list(self.circle_lambdas),
            )
        )


def _half_bits(mat: GaussMat2) -> tuple[int, int, int, int]:
    return tuple(e.mod_half() for e in mat.entries)


def fuchsian_reduction_check() -> FuchsianReport:
    """Fixed verifications for the four stabilizer generators: determinants,
    mod-(1-i) images, the order-3 cyclic image, and circle preservation."""
    dets_ok = all(x.det == ONE for x in STABILIZER_GENERATORS)
    images = [ResidueMat2.from_matrix(x, 0) for x in STABILIZER_GENERATORS]
    ident = ResidueMat2.identity(0)
    first_pair_trivial = images[0] == ident and images[1] == ident
    x3_bits = _half_bits(X3)
    x4_bits = _half_bits(X4)
    x3_expected = x3_bits == (0, 1, 1, 1)
    x4_expected = x4_bits == (1, 1, 1, 0)
    # closure of the image subgroup inside SL2 of the two-element field
    generators = [images[2], images[3]]
    members = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                prod = m * g
                if prod not in members:
                    members.add(prod)
                    nxt.append(prod)
        frontier = nxt
    image_order = len(members)
    image_cyclic = any(
        m != ident and m.order(budget=16) == image_order for m in members
    ) or image_order == 1
    lambdas = tuple(circle_preserved(x, CIRCLE) for x in STABILIZER_GENERATORS)
    return FuchsianReport(
        dets_ok=dets_ok,
        first_pair_trivial=first_pair_trivial,
        x3_image=x3_bits,
        x4_image=x4_bits,
        x3_expected=x3_expected,
        x4_expected=x4_expected,
        image_order=image_order,
        image_cyclic=image_cyclic,
        circle_lambdas=lambdas,
    )
