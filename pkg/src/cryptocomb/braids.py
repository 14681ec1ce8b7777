"""Braid words, group moves, and closure bookkeeping.

A braid on n strands is a word in the generators sigma_1 .. sigma_(n-1),
where sigma_i crosses strand i over strand i+1. Letters are stored as
signed integers: +i for sigma_i, -i for its inverse. The text form reads
``B5: 1 3 -4 -3`` and the JSON form is ``{"strands": 5, "word": [...]}``.
"""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import IllegalDestabilize, NoMatch, StrandMismatch

_TEXT_RE = re.compile(r"^\s*B(\d+)\s*:\s*(.*?)\s*$")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "word", tuple(self.word))
        for letter in self.word:
            if not isinstance(letter, int) or letter == 0:
                raise ValueError(f"letters are nonzero signed integers, got {letter!r}")
            if abs(letter) > self.strands - 1:
                raise ValueError(
                    f"generator {abs(letter)} needs {abs(letter) + 1} strands, have {self.strands}"
                )

    def letters(self) -> Iterator[tuple[int, int]]:
        """Yield (generator index, sign) pairs in word order."""
        for letter in self.word:
            yield abs(letter), 1 if letter > 0 else -1

    def __len__(self) -> int:
        return len(self.word)

    # text and JSON forms

    def to_text(self) -> str:
        return f"B{self.strands}: " + " ".join(str(x) for x in self.word)

    @classmethod
    def from_text(cls, text: str) -> BraidWord:
        m = _TEXT_RE.match(text)
        if not m:
            raise ValueError(f"not a braid word: {text!r}")
        strands = int(m.group(1))
        body = m.group(2)
        word = tuple(int(tok) for tok in body.split()) if body else ()
        return cls(strands, word)

    def to_json_obj(self) -> dict:
        return {"strands": self.strands, "word": list(self.word)}

    @classmethod
    def from_json_obj(cls, obj) -> BraidWord:
        if not isinstance(obj, dict) or "strands" not in obj or "word" not in obj:
            raise ValueError("braid JSON must have 'strands' and 'word'")
        return cls(int(obj["strands"]), tuple(int(x) for x in obj["word"]))

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> BraidWord:
        return cls.from_json_obj(json.loads(text))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatch(f"cannot concatenate B{a.strands} with B{b.strands}")
    return BraidWord(a.strands, a.word + b.word)


def invert(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-x for x in reversed(b.word)))


def embed(b: BraidWord, strands: int, offset: int = 0) -> BraidWord:
    """Recast b on a wider braid group, shifting generator indices by offset."""
    if strands < b.strands + offset:
        raise StrandMismatch("embedding target too narrow")
    word = tuple((abs(x) + offset) * (1 if x > 0 else -1) for x in b.word)
    return BraidWord(strands, word)


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in b.word)


@dataclass(frozen=True)
class Permutation:
    """images[i] is the final position of the strand starting at position i."""

    images: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())


def permutation(b: BraidWord) -> Permutation:
    # track which strand occupies each position, top to bottom
    occupant = list(range(b.strands))
    for i, _sign in b.letters():
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
    images = [0] * b.strands
    for pos, strand in enumerate(occupant):
        images[strand] = pos
    return Permutation(tuple(images))


def closure_components(b: BraidWord) -> int:
    """Number of link components of the braid closure."""
    return permutation(b).cycle_count()


def is_knot(b: BraidWord) -> bool:
    return closure_components(b) == 1


# group relations

FAR_COMMUTE = "far_commute"
BRAID_RELATION = "braid_relation"


def apply_relation(b: BraidWord, position: int, kind: str) -> BraidWord:
    """Rewrite the word at position with a defining relation of the group.

    far_commute swaps adjacent letters whose indices differ by at least 2.
    braid_relation rewrites sigma_a sigma_b sigma_a -> sigma_b sigma_a sigma_b
    for |a - b| = 1, also in the fully inverted form. Both directions are the
    same rule read off the matched segment. Raises NoMatch if the segment at
    position does not match.
    """
    w = b.word
    if kind == FAR_COMMUTE:
        if not 0 <= position <= len(w) - 2:
            raise NoMatch(f"no two letters at position {position}")
        x, y = w[position], w[position + 1]
        if abs(abs(x) - abs(y)) < 2:
            raise NoMatch(f"generators {abs(x)} and {abs(y)} are not far apart")
        return BraidWord(b.strands, w[:position] + (y, x) + w[position + 2 :])
    if kind == BRAID_RELATION:
        if not 0 <= position <= len(w) - 3:
            raise NoMatch(f"no three letters at position {position}")
        x, y, z = w[position : position + 3]
        if x != z or abs(abs(x) - abs(y)) != 1 or (x > 0) != (y > 0):
            raise NoMatch("segment is not sigma_a sigma_b sigma_a with |a-b| = 1")
        return BraidWord(b.strands, w[:position] + (y, x, y) + w[position + 3 :])
    raise ValueError(f"unknown relation kind {kind!r}")


def relation_positions(b: BraidWord, kind: str) -> list[int]:
    """All positions where apply_relation(b, pos, kind) would succeed."""
    out = []
    w = b.word
    if kind == FAR_COMMUTE:
        for pos in range(len(w) - 1):
            if abs(abs(w[pos]) - abs(w[pos + 1])) >= 2:
                out.append(pos)
    elif kind == BRAID_RELATION:
        for pos in range(len(w) - 2):
            x, y, z = w[pos : pos + 3]
            if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
                out.append(pos)
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return out


# Markov moves: closure-preserving transformations


@dataclass(frozen=True)
class Conjugate:
    gamma: BraidWord


@dataclass(frozen=True)
class Stabilize:
    sign: int = 1


@dataclass(frozen=True)
class Destabilize:
    pass


def markov_conjugate(b: BraidWord, gamma: BraidWord) -> BraidWord:
    return concat(concat(gamma, b), invert(gamma))


def markov_stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return BraidWord(b.strands + 1, b.word + (sign * b.strands,))


def markov_destabilize(b: BraidWord) -> BraidWord:
    top = b.strands - 1
    if b.strands < 2 or not b.word or abs(b.word[-1]) != top:
        raise IllegalDestabilize("word does not end with a top-strand crossing")
    if any(abs(x) == top for x in b.word[:-1]):
        raise IllegalDestabilize("top generator occurs before the final letter")
    return BraidWord(b.strands - 1, b.word[:-1])


def markov_move(b: BraidWord, move) -> BraidWord:
    if isinstance(move, Conjugate):
        return markov_conjugate(b, move.gamma)
    if isinstance(move, Stabilize):
        return markov_stabilize(b, move.sign)
    if isinstance(move, Destabilize):
        return markov_destabilize(b)
    raise TypeError(f"not a Markov move: {move!r}")


# random words


def random_braid(strands: int, length: int, rng: random.Random | int | None = None) -> BraidWord:
    if strands < 2:
        raise ValueError("random braids need at least 2 strands")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    word = tuple(
        rng.randint(1, strands - 1) * rng.choice((1, -1)) for _ in range(length)
    )
    return BraidWord(strands, word)


def random_knot_braid(
    strands: int, length: int, rng: random.Random | int | None = None
) -> BraidWord:
    """Random braid whose closure is a knot, by rejection sampling.

    A word of length L induces a permutation of sign (-1)**L, while a full
    n-cycle has sign (-1)**(n-1), so the requested length is bumped by one
    when its parity rules out a knot (and raised to n-1 when too short to
    reach an n-cycle at all).
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    length = max(length, strands - 1)
    if (length - (strands - 1)) % 2:
        length += 1
    while True:
        b = random_braid(strands, length, rng)
        if is_knot(b):
            return b


def parse_braid(text: str) -> BraidWord:
    """Parse either the text form ``Bn: ...`` or the JSON form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return BraidWord.from_json(stripped)
    return BraidWord.from_text(stripped)
