"""Words over a finite alphabet, their natural-number codes, and partial sequences.

A partial sequence ``f`` with domain ``[0, n]`` is read in *inverse* index
order: the word it denotes is ``decode(f(n)) + ... + decode(f(0))``.  Two
partial sequences are equivalent when they denote the same word; the
equivalence classes are the readable sentences.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import BadCode, NoDecomposition, UnknownGlyph

BLANK = "|||"

# classes are materialized in full, so keep them desk sized
MAX_CLASS_WORD_LENGTH = 16


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    blank: str = BLANK

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("alphabet must be nonempty")
        if any(not s for s in self.symbols):
            raise ValueError("glyphs must be nonempty strings")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet has duplicate glyphs")
        if self.symbols.count(self.blank) != 1:
            raise ValueError(f"alphabet must contain the blank glyph {self.blank!r} exactly once")

    @classmethod
    def default(cls) -> "Alphabet":
        return cls(tuple("abcdefghijklmnopqrstuvwxyz") + (",", BLANK))

    def __len__(self):
        return len(self.symbols)

    def index(self, glyph: str) -> int:
        try:
            return self.symbols.index(glyph)
        except ValueError:
            raise UnknownGlyph(f"glyph {glyph!r} is not in the alphabet") from None

    def split(self, text: str) -> tuple[str, ...]:
        """Tokenize ``text`` into glyphs, longest glyph first at each position."""
        by_length = sorted(self.symbols, key=len, reverse=True)
        glyphs = []
        i = 0
        while i < len(text):
            for g in by_length:
                if text.startswith(g, i):
                    glyphs.append(g)
                    i += len(g)
                    break
            else:
                raise UnknownGlyph(f"no glyph matches at {text[i:]!r}")
        return tuple(glyphs)

    def words(self, max_length: int) -> Iterator["Word"]:
        """All words of length 1..max_length, in code order."""
        for n in range(1, max_length + 1):
            for glyphs in product(self.symbols, repeat=n):
                yield Word(glyphs)


@dataclass(frozen=True, order=True)
class Word:
    glyphs: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "glyphs", tuple(self.glyphs))
        if not self.glyphs:
            raise ValueError("the empty word is not a word")

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "Word":
        return cls(alphabet.split(text))

    def __len__(self):
        return len(self.glyphs)

    def __str__(self):
        return "".join(self.glyphs)

    def subwords(self) -> set["Word"]:
        n = len(self.glyphs)
        return {Word(self.glyphs[i:j]) for i in range(n) for j in range(i + 1, n + 1)}


def join(w1: Word, w2: Word) -> Word:
    return Word(w1.glyphs + w2.glyphs)


def encode(w: Word, alphabet: Alphabet) -> int:
    """Bijective base-|alphabet| numeral of ``w``; shorter words get smaller codes."""
    k = len(alphabet)
    code = 0
    for g in w.glyphs:
        code = code * k + alphabet.index(g) + 1
    return code


def decode(code: int, alphabet: Alphabet) -> Word:
    if not isinstance(code, int) or isinstance(code, bool) or code < 1:
        raise BadCode(code)
    k = len(alphabet)
    glyphs = []
    while code > 0:
        code, digit = divmod(code - 1, k)
        glyphs.append(alphabet.symbols[digit])
    return Word(tuple(reversed(glyphs)))


@dataclass(frozen=True)
class PartialSequence:
    """A map ``{0..n} -> codes``; ``entries[i]`` is the value at ``i``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("a partial sequence has domain [0, n] with n >= 0")

    @property
    def dom_upper(self) -> int:
        return len(self.entries) - 1

    def __call__(self, i: int) -> int:
        return self.entries[i]

    @classmethod
    def reading(cls, segments: Sequence[Word], alphabet: Alphabet) -> "PartialSequence":
        """Build the sequence that reads ``segments`` left to right.

        The leftmost segment sits at the top index ``n``.
        """
        return cls(tuple(encode(w, alphabet) for w in reversed(segments)))

    def segments(self, alphabet: Alphabet) -> list[Word]:
        return [decode(c, alphabet) for c in reversed(self.entries)]


def word_of(f: PartialSequence, alphabet: Alphabet) -> Word:
    glyphs: tuple[str, ...] = ()
    for code in reversed(f.entries):
        glyphs += decode(code, alphabet).glyphs
    return Word(glyphs)


def equivalent(f: PartialSequence, g: PartialSequence, alphabet: Alphabet) -> bool:
    return word_of(f, alphabet) == word_of(g, alphabet)


@dataclass(frozen=True)
class ReadableSentence:
    representative_word: Word
    members: frozenset[PartialSequence]

    def degrees(self) -> dict[int, int]:
        """Number of members in each ``H^k``, keyed by ``k``."""
        counts: dict[int, int] = {}
        for f in self.members:
            counts[f.dom_upper] = counts.get(f.dom_upper, 0) + 1
        return dict(sorted(counts.items()))

    def __len__(self):
        return len(self.members)


def all_subword_codes(w: Word, alphabet: Alphabet) -> frozenset[int]:
    return frozenset(encode(s, alphabet) for s in w.subwords())


def enumerate_class(w: Word, H: Iterable[int], alphabet: Alphabet) -> ReadableSentence:
    """Every partial sequence over the code set ``H`` whose word is ``w``."""
    if len(w) > MAX_CLASS_WORD_LENGTH:
        raise ValueError(f"word longer than {MAX_CLASS_WORD_LENGTH} glyphs")
    H = frozenset(H)
    n = len(w)
    # segmentations[i] = all ways to cut glyphs[i:] into segments with codes in H
    segmentations: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    segmentations[n] = [()]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n + 1):
            code = encode(Word(w.glyphs[i:j]), alphabet)
            if code in H:
                segmentations[i].extend((code,) + rest for rest in segmentations[j])
    if not segmentations[0]:
        raise NoDecomposition(str(w))
    members = frozenset(PartialSequence(tuple(reversed(seg))) for seg in segmentations[0])
    return ReadableSentence(w, members)
