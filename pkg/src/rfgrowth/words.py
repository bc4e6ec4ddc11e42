"""Reduced words over a finite symmetric alphabet.

A word is a tuple of letters (gen, sign) with gen an index into the
alphabet and sign +1 or -1.  Words are always stored freely reduced.
The plain text format is one letter per token, the generator name
optionally followed by ``^-1``, tokens whitespace-separated::

    x y^-1 x x

An empty line is the identity.  parse_word reads exactly this format;
parse_word_expr additionally understands integer powers, parentheses
and commutator brackets ``[u,v]`` for interactive use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Letter = tuple[int, int]


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent inverse pairs until none remain (stack scan)."""
    out: list[Letter] = []
    for gen, sign in letters:
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


@dataclass(frozen=True)
class Alphabet:
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names: %r" % (self.names,))
        for name in self.names:
            if not name or not name.replace("_", "").isalnum() or name[0].isdigit():
                raise ValueError("bad generator name %r" % name)

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError("unknown generator %r (alphabet %s)" % (name, list(self.names)))


FREE2 = Alphabet(("x", "y"))
SURFACE4 = Alphabet(("a1", "b1", "a2", "b2"))
LAMP = Alphabet(("a", "t"))
LINE = Alphabet(("t",))


@dataclass(frozen=True)
class Word:
    """A freely reduced word over a fixed alphabet."""

    alphabet: Alphabet
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        reduced = free_reduce(self.letters)
        if reduced != self.letters:
            object.__setattr__(self, "letters", reduced)
        for gen, sign in self.letters:
            if not 0 <= gen < self.alphabet.rank or sign not in (1, -1):
                raise ValueError("letter (%r, %r) out of range" % (gen, sign))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise ValueError("mixed alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word(self.alphabet, tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        out = Word(self.alphabet, ())
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self, by: "Word") -> "Word":
        return by * self * ~by

    def exponent_sums(self) -> tuple[int, ...]:
        """Image in the free abelianization, one sum per generator."""
        sums = [0] * self.alphabet.rank
        for gen, sign in self.letters:
            sums[gen] += sign
        return tuple(sums)

    def __str__(self) -> str:
        if not self.letters:
            return ""
        return " ".join(
            self.alphabet.names[g] + ("" if s == 1 else "^-1") for g, s in self.letters
        )

    def __repr__(self) -> str:
        return "Word(%r)" % (str(self) or "1")


def word(alphabet: Alphabet, text: str) -> Word:
    return parse_word(text, alphabet)


def generator(alphabet: Alphabet, i: int, sign: int = 1) -> Word:
    return Word(alphabet, ((i, sign),))


def commutator(u: Word, v: Word) -> Word:
    return u * v * ~u * ~v


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse the plain one-word format: whitespace-separated letters,
    each a generator name with an optional ^<integer>."""
    letters: list[Letter] = []
    for token in text.split():
        name, caret, exp_text = token.partition("^")
        if caret:
            try:
                exp = int(exp_text)
            except ValueError:
                raise ValueError("bad exponent %r in token %r" % (exp_text, token)) from None
        else:
            exp = 1
        index = alphabet.index(name)
        sign = 1 if exp > 0 else -1
        letters.extend((index, sign) for _ in range(abs(exp)))
    return Word(alphabet, tuple(letters))


class _ExprParser:
    """name ('^' int)? | '[' expr ',' expr ']' | '(' expr ')', juxtaposition = product."""

    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet

    def error(self, msg: str) -> ValueError:
        return ValueError("word syntax error at position %d: %s" % (self.pos, msg))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Word:
        w = self.expr()
        if self.peek():
            raise self.error("unexpected %r" % self.peek())
        return w

    def expr(self) -> Word:
        out = Word(self.alphabet, ())
        while True:
            ch = self.peek()
            if not ch or ch in ",])":
                return out
            out = out * self.term()

    def term(self) -> Word:
        w = self.atom()
        if self.peek() == "^":
            self.pos += 1
            w = w ** self.integer()
        return w

    def atom(self) -> Word:
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            u = self.expr()
            self.expect(",")
            v = self.expr()
            self.expect("]")
            return commutator(u, v)
        if ch == "(":
            self.pos += 1
            w = self.expr()
            self.expect(")")
            return w
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            try:
                idx = self.alphabet.index(name)
            except ValueError as exc:
                self.pos = start
                raise self.error(str(exc))
            return generator(self.alphabet, idx)
        raise self.error("expected a generator, '[' or '('")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start : self.pos].lstrip("+-"):
            raise self.error("expected an integer exponent")
        return int(self.text[start : self.pos])

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error("expected %r" % ch)
        self.pos += 1


def parse_word_expr(text: str, alphabet: Alphabet) -> Word:
    """Parse the richer expression format used on the command line."""
    return _ExprParser(text, alphabet).parse()
