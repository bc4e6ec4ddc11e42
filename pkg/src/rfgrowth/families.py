"""Families of finitely generated groups with computable ball enumeration.

Each family knows how to multiply its own elements, evaluate a word from
the standard generating set, enumerate the ball of a given radius with
exact word lengths, and push elements through a candidate finite quotient
given images for the generators.  Four families are implemented:

* free groups of any rank (reduced words, everything exact),
* the genus-2 surface group (Dehn's algorithm on the length-8 relator,
  which satisfies the C'(1/8) small-cancellation condition, so trivial
  words reduce to the empty word; reported lengths are upper bounds),
* the integers (one generator),
* lamplighter groups (Z/p or Z lamps over a Z street, with a closed-form
  word length).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError
from .words import (
    FREE2,
    LAMP,
    LINE,
    SURFACE4,
    Alphabet,
    Letter,
    Word,
    commutator,
    free_reduce,
    generator,
    parse_word,
    parse_word_expr,
)
from .wreath import WreathElement, wreath_word_length

DEFAULT_BALL_BUDGET = 200_000


@dataclass(frozen=True)
class Length:
    """A word-length value; exact=False marks an upper bound."""

    value: int
    exact: bool


class GroupFamily:
    """Interface shared by all families.

    Subclasses fix ``tag`` (the CLI name), ``alphabet`` (generator names),
    and the element operations.  Elements are hashable values whose type
    depends on the family.
    """

    tag: str
    alphabet: Alphabet

    @property
    def rank(self) -> int:
        return self.alphabet.rank

    def identity(self):
        raise NotImplementedError

    def is_identity(self, g) -> bool:
        raise NotImplementedError

    def multiply(self, g, h):
        raise NotImplementedError

    def inverse(self, g):
        raise NotImplementedError

    def generator_element(self, index: int, sign: int = 1):
        """The image of one generator (or its inverse) in the family."""
        raise NotImplementedError

    def from_word(self, w: Word):
        if w.alphabet.names != self.alphabet.names:
            raise ValueError(
                "word over %r fed to family over %r"
                % (w.alphabet.names, self.alphabet.names)
            )
        g = self.identity()
        for index, sign in w.letters:
            g = self.multiply(g, self.generator_element(index, sign))
        return g

    def parse_element(self, text: str):
        try:
            w = parse_word(text, self.alphabet)
        except ValueError:
            w = parse_word_expr(text, self.alphabet)
        return self.from_word(w)

    def key(self, g) -> str:
        """Stable string key for caching; equal elements get equal keys."""
        raise NotImplementedError

    def describe(self, g) -> str:
        return self.key(g)

    def length(self, g) -> Length:
        raise NotImplementedError

    def ball(self, radius: int, budget: int = DEFAULT_BALL_BUDGET) -> list[tuple[object, int]]:
        """Non-identity elements of word length <= radius, as (element, length),
        lengths ascending, deterministic order within a length."""
        raise NotImplementedError

    # -- finite quotients -----------------------------------------------------

    def relations_hold(self, table, images: tuple[int, ...]) -> bool:
        """Do these generator images define a homomorphism into the table?"""
        raise NotImplementedError

    def image(self, table, images: tuple[int, ...], g) -> int:
        """Image of g under the homomorphism sending generators to images.

        Callers must have checked relations_hold first; the result is
        meaningless otherwise.
        """
        raise NotImplementedError


# -- free groups ----------------------------------------------------------------


class FreeFamily(GroupFamily):
    """Free group of the given rank; elements are reduced words."""

    def __init__(self, rank: int, alphabet: Alphabet | None = None):
        if alphabet is None:
            if rank == 2:
                alphabet = FREE2
            else:
                alphabet = Alphabet(tuple("x%d" % (i + 1) for i in range(rank)))
        if alphabet.rank != rank:
            raise ValueError("alphabet rank %d != %d" % (alphabet.rank, rank))
        self.tag = "free%d" % rank
        self.alphabet = alphabet

    def identity(self) -> Word:
        return Word(self.alphabet, ())

    def is_identity(self, g: Word) -> bool:
        return len(g.letters) == 0

    def multiply(self, g: Word, h: Word) -> Word:
        return g * h

    def inverse(self, g: Word) -> Word:
        return ~g

    def generator_element(self, index: int, sign: int = 1) -> Word:
        return generator(self.alphabet, index, sign)

    def from_word(self, w: Word) -> Word:
        if w.alphabet.names != self.alphabet.names:
            raise ValueError(
                "word over %r fed to family over %r"
                % (w.alphabet.names, self.alphabet.names)
            )
        return w

    def key(self, g: Word) -> str:
        return str(g)

    def length(self, g: Word) -> Length:
        return Length(len(g.letters), True)

    def ball(self, radius: int, budget: int = DEFAULT_BALL_BUDGET) -> list[tuple[Word, int]]:
        if radius < 0:
            raise ValueError("radius must be >= 0")
        out: list[tuple[Word, int]] = []
        frontier: list[tuple[Letter, ...]] = [()]
        steps = [(i, s) for i in range(self.rank) for s in (1, -1)]
        for dist in range(1, radius + 1):
            nxt: list[tuple[Letter, ...]] = []
            for letters in frontier:
                for step in steps:
                    if letters and letters[-1] == (step[0], -step[1]):
                        continue  # would cancel, not reduced
                    nxt.append(letters + (step,))
            for letters in nxt:
                out.append((Word(self.alphabet, letters), dist))
            if len(out) > budget:
                raise BudgetError(
                    "free ball of radius %d exceeds %d elements" % (radius, budget)
                )
            frontier = nxt
        return out

    def relations_hold(self, table, images: tuple[int, ...]) -> bool:
        return True  # free: any assignment extends

    def image(self, table, images: tuple[int, ...], g: Word) -> int:
        acc = 0
        for index, sign in g.letters:
            v = images[index] if sign == 1 else table.inv[images[index]]
            acc = table.mul[acc][v]
        return acc


# -- genus-2 surface group --------------------------------------------------------


def _cyclic_subwords(relator: tuple[Letter, ...]) -> dict[tuple[Letter, ...], tuple[Letter, ...]]:
    """Map each subword of length > half the relator length (taken from every
    cyclic rotation of the relator and its inverse) to the inverse of the
    complementary piece, which is strictly shorter."""
    n = len(relator)
    half = n // 2
    inv = tuple((i, -s) for i, s in reversed(relator))
    table: dict[tuple[Letter, ...], tuple[Letter, ...]] = {}
    for base in (relator, inv):
        doubled = base + base
        for start in range(n):
            for size in range(half + 1, n + 1):
                piece = doubled[start:start + size]
                rest = doubled[start + size:start + n]
                # piece * rest is a rotation of base, so piece = rest^-1 in the group
                table[piece] = tuple((i, -s) for i, s in reversed(rest))
    return table


class SurfaceFamily(GroupFamily):
    """Genus-2 surface group: generators a1 b1 a2 b2, one relator
    [a1,b1][a2,b2].  Dehn reduction is the normal form used for the word
    problem; lengths of nontrivial elements are upper bounds."""

    def __init__(self) -> None:
        self.tag = "surface"
        self.alphabet = SURFACE4
        a1 = generator(SURFACE4, 0)
        b1 = generator(SURFACE4, 1)
        a2 = generator(SURFACE4, 2)
        b2 = generator(SURFACE4, 3)
        self.relator = commutator(a1, b1) * commutator(a2, b2)
        self._replacements = _cyclic_subwords(self.relator.letters)
        self._max_piece = len(self.relator.letters)
        self._min_piece = len(self.relator.letters) // 2 + 1

    def dehn_reduce(self, w: Word) -> Word:
        """Shorten w by replacing any long relator subword with the shorter
        complement until none remains.  Trivial elements reach the empty word."""
        letters = list(free_reduce(w.letters))
        changed = True
        while changed:
            changed = False
            n = len(letters)
            for size in range(min(self._max_piece, n), self._min_piece - 1, -1):
                for start in range(n - size + 1):
                    piece = tuple(letters[start:start + size])
                    repl = self._replacements.get(piece)
                    if repl is not None:
                        letters = list(
                            free_reduce(tuple(letters[:start]) + repl + tuple(letters[start + size:]))
                        )
                        changed = True
                        break
                if changed:
                    break
        return Word(self.alphabet, tuple(letters))

    def identity(self) -> Word:
        return Word(self.alphabet, ())

    def is_identity(self, g: Word) -> bool:
        return len(self.dehn_reduce(g).letters) == 0

    def multiply(self, g: Word, h: Word) -> Word:
        return self.dehn_reduce(g * h)

    def inverse(self, g: Word) -> Word:
        return ~g

    def generator_element(self, index: int, sign: int = 1) -> Word:
        return generator(self.alphabet, index, sign)

    def from_word(self, w: Word) -> Word:
        if w.alphabet.names != self.alphabet.names:
            raise ValueError(
                "word over %r fed to family over %r"
                % (w.alphabet.names, self.alphabet.names)
            )
        return self.dehn_reduce(w)

    def key(self, g: Word) -> str:
        return str(self.dehn_reduce(g))

    def length(self, g: Word) -> Length:
        reduced = self.dehn_reduce(g)
        return Length(len(reduced.letters), len(reduced.letters) == 0)

    def equal(self, g: Word, h: Word) -> bool:
        return self.is_identity(g * ~h)

    def ball(self, radius: int, budget: int = DEFAULT_BALL_BUDGET) -> list[tuple[Word, int]]:
        """Ball via freely reduced words, deduplicated by solving the word
        problem pairwise inside abelianization buckets.  Below radius 4 no
        two distinct reduced words are equal (relator length 8), but the
        check runs everywhere."""
        if radius < 0:
            raise ValueError("radius must be >= 0")
        free_ball = FreeFamily(4, self.alphabet).ball(radius, budget)
        out: list[tuple[Word, int]] = []
        buckets: dict[tuple[int, ...], list[Word]] = {}
        for w, dist in free_ball:
            ab = w.exponent_sums()
            known = buckets.setdefault(ab, [])
            if any(self.is_identity(w * ~r) for r in known):
                continue
            known.append(w)
            out.append((w, dist))
        return out

    def relations_hold(self, table, images: tuple[int, ...]) -> bool:
        return self.image(table, images, self.relator) == 0

    def image(self, table, images: tuple[int, ...], g: Word) -> int:
        acc = 0
        for index, sign in g.letters:
            v = images[index] if sign == 1 else table.inv[images[index]]
            acc = table.mul[acc][v]
        return acc


# -- the integers -----------------------------------------------------------------


class IntegerLineFamily(GroupFamily):
    """Z with one generator t; elements are plain ints."""

    def __init__(self) -> None:
        self.tag = "z"
        self.alphabet = LINE

    def identity(self) -> int:
        return 0

    def is_identity(self, g: int) -> bool:
        return g == 0

    def multiply(self, g: int, h: int) -> int:
        return g + h

    def inverse(self, g: int) -> int:
        return -g

    def generator_element(self, index: int, sign: int = 1) -> int:
        return sign

    def parse_element(self, text: str):
        text = text.strip()
        try:
            return int(text)
        except ValueError:
            return super().parse_element(text)

    def key(self, g: int) -> str:
        return str(g)

    def length(self, g: int) -> Length:
        return Length(abs(g), True)

    def ball(self, radius: int, budget: int = DEFAULT_BALL_BUDGET) -> list[tuple[int, int]]:
        if radius < 0:
            raise ValueError("radius must be >= 0")
        if 2 * radius > budget:
            raise BudgetError("ball of radius %d exceeds %d elements" % (radius, budget))
        out = []
        for dist in range(1, radius + 1):
            out.append((dist, dist))
            out.append((-dist, dist))
        return out

    def relations_hold(self, table, images: tuple[int, ...]) -> bool:
        return True

    def image(self, table, images: tuple[int, ...], g: int) -> int:
        return table.power(images[0], g)


# -- lamplighters -----------------------------------------------------------------


class LamplighterFamily(GroupFamily):
    """Lamplighter with Z/p lamps (p prime) or Z lamps (modulus 0).

    Generators: a toggles the lamp at the origin, t shifts the lamplighter.
    Elements are WreathElement values; word length is computed in closed
    form (lamp presses plus the shorter left/right walk).
    """

    def __init__(self, modulus: int) -> None:
        if modulus < 0 or modulus == 1:
            raise ValueError("modulus must be 0 (integer lamps) or >= 2")
        self.tag = "lampz" if modulus == 0 else "lamp%d" % modulus
        self.modulus = modulus
        self.alphabet = LAMP

    def identity(self) -> WreathElement:
        return WreathElement.identity(self.modulus)

    def is_identity(self, g: WreathElement) -> bool:
        return not g.lamps and g.shift == 0

    def multiply(self, g: WreathElement, h: WreathElement) -> WreathElement:
        return g * h

    def inverse(self, g: WreathElement) -> WreathElement:
        return g.inverse()

    def generator_element(self, index: int, sign: int = 1) -> WreathElement:
        if index == 0:
            e = WreathElement.lamp(self.modulus, 0, 1)
        else:
            e = WreathElement.shift_gen(self.modulus)
        return e if sign == 1 else e.inverse()

    def key(self, g: WreathElement) -> str:
        return "%s|%s" % (",".join("%d:%d" % lc for lc in g.lamps), g.shift)

    def describe(self, g: WreathElement) -> str:
        lamps = " ".join("%d@%d" % (c, pos) for pos, c in g.lamps) or "-"
        return "lamps[%s] shift %d" % (lamps, g.shift)

    def length(self, g: WreathElement) -> Length:
        return Length(wreath_word_length(g), True)

    def ball(self, radius: int, budget: int = DEFAULT_BALL_BUDGET) -> list[tuple[WreathElement, int]]:
        """Breadth-first search of the Cayley graph; distances are exact."""
        if radius < 0:
            raise ValueError("radius must be >= 0")
        gens = [
            self.generator_element(0, 1),
            self.generator_element(0, -1),
            self.generator_element(1, 1),
            self.generator_element(1, -1),
        ]
        start = self.identity()
        seen = {start}
        frontier = [start]
        out: list[tuple[WreathElement, int]] = []
        for dist in range(1, radius + 1):
            nxt = []
            for g in frontier:
                for step in gens:
                    h = g * step
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
                        out.append((h, dist))
            if len(seen) > budget:
                raise BudgetError(
                    "lamplighter ball of radius %d exceeds %d elements" % (radius, budget)
                )
            frontier = nxt
        return out

    def relations_hold(self, table, images: tuple[int, ...]) -> bool:
        alpha, tau = images
        if self.modulus and table.power(alpha, self.modulus) != 0:
            return False
        t_ord = table.order_of(tau)
        for i in range(1, t_ord + 1):
            moved = table.mul[table.mul[table.power(tau, -i)][alpha]][table.power(tau, i)]
            if table.comm(moved, alpha) != 0:
                return False
        return True

    def image(self, table, images: tuple[int, ...], g: WreathElement) -> int:
        alpha, tau = images
        acc = 0
        for pos, coeff in g.lamps:
            conj = table.mul[
                table.mul[table.power(tau, pos)][table.power(alpha, coeff)]
            ][table.power(tau, -pos)]
            acc = table.mul[acc][conj]
        return table.mul[acc][table.power(tau, g.shift)]


# -- registry ---------------------------------------------------------------------


def get_family(tag: str) -> GroupFamily:
    """Look a family up by its CLI tag: free<k>, surface, z, lamp<p>, lampz."""
    tag = tag.strip().lower()
    if tag == "surface":
        return SurfaceFamily()
    if tag == "z":
        return IntegerLineFamily()
    if tag == "lampz":
        return LamplighterFamily(0)
    if tag.startswith("free"):
        try:
            rank = int(tag[4:])
        except ValueError:
            raise ValueError("bad family tag %r" % tag) from None
        if rank < 1:
            raise ValueError("free rank must be >= 1, got %d" % rank)
        return FreeFamily(rank)
    if tag.startswith("lamp"):
        try:
            p = int(tag[4:])
        except ValueError:
            raise ValueError("bad family tag %r" % tag) from None
        return LamplighterFamily(p)
    raise ValueError(
        "unknown family %r (expected free<k>, surface, z, lamp<p>, or lampz)" % tag
    )


FAMILY_TAGS = ("free2", "surface", "z", "lamp2", "lamp3", "lampz")
