"""Cyclic words of singular and regular blocks.

A word is a cyclic list of blocks ``s_k`` (expanding to ``k+2, 2, ..., 2``,
length k) and ``r_m`` (expanding to m twos).  Words are written in a small
text form such as ``"s3 r2 s1"``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class SequenceError(ValueError):
    """Raised for malformed or inadmissible words."""


class SequenceSyntaxError(SequenceError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Kind(enum.IntEnum):
    # order matters: singular blocks sort before regular ones
    SINGULAR = 0
    REGULAR = 1


@dataclass(frozen=True, order=True)
class Part:
    kind: Kind
    length: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.length < 1:
            raise SequenceError(f"block length must be >= 1, got {self.length}")

    @property
    def is_singular(self) -> bool:
        return self.kind is Kind.SINGULAR

    def expand(self) -> tuple[int, ...]:
        if self.is_singular:
            return (self.length + 2,) + (2,) * (self.length - 1)
        return (2,) * self.length

    def __str__(self) -> str:
        return f"{'s' if self.is_singular else 'r'}{self.length}"


def S(k: int) -> Part:
    return Part(Kind.SINGULAR, k)


def R(m: int) -> Part:
    return Part(Kind.REGULAR, m)


@dataclass(frozen=True)
class SigmaWord:
    """An admissible cyclic word; validated on construction."""

    parts: tuple[Part, ...]

    def __init__(self, parts: Iterable[Part]):
        object.__setattr__(self, "parts", tuple(parts))
        _validate(self.parts)

    @property
    def N(self) -> int:
        return sum(p.is_singular for p in self.parts)

    @property
    def rho(self) -> int:
        return len(self.parts) - self.N

    @property
    def n(self) -> int:
        return sum(p.length for p in self.parts)

    @property
    def singular_lengths(self) -> tuple[int, ...]:
        return tuple(p.length for p in self.parts if p.is_singular)

    @property
    def regular_lengths(self) -> tuple[int, ...]:
        return tuple(p.length for p in self.parts if not p.is_singular)

    def rotate(self, shift: int) -> SigmaWord:
        if not self.parts:
            return self
        shift %= len(self.parts)
        return SigmaWord(self.parts[shift:] + self.parts[:shift])

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"SigmaWord({str(self)!r})"


def _validate(parts: Sequence[Part]) -> None:
    if not parts:
        raise SequenceError("empty word")
    count = len(parts)
    n_singular = sum(p.is_singular for p in parts)
    if n_singular == 0:
        if count != 1:
            raise SequenceError("adjacent regular parts")
        return
    for i, part in enumerate(parts):
        if not part.is_singular and not parts[(i + 1) % count].is_singular:
            raise SequenceError("adjacent regular parts")


_TOKEN = re.compile(r"([sr])([1-9][0-9]*)")
_ZERO = re.compile(r"[sr]0+\b")


def parse_sigma(text: str) -> SigmaWord:
    """Parse ``"s3 r2 s1"`` (whitespace or commas between blocks)."""
    parts = []
    pos = 0
    expect_part = True
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == ",":
            if expect_part:
                raise SequenceSyntaxError("unexpected ','", pos)
            expect_part = True
            pos += 1
            continue
        if _ZERO.match(text, pos):
            raise SequenceError(f"block length must be >= 1 (position {pos})")
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SequenceSyntaxError(f"expected s<int> or r<int>, found {ch!r}", pos)
        kind = Kind.SINGULAR if m.group(1) == "s" else Kind.REGULAR
        parts.append(Part(kind, int(m.group(2))))
        pos = m.end()
        if pos < len(text) and not (text[pos].isspace() or text[pos] == ","):
            raise SequenceSyntaxError(f"unexpected {text[pos]!r}", pos)
        expect_part = False
    if not parts:
        raise SequenceError("empty word")
    if expect_part:
        raise SequenceSyntaxError("trailing ','", len(text))
    return SigmaWord(parts)


def expand(w: SigmaWord) -> tuple[int, ...]:
    """The a-word: opposite self-intersections over one period."""
    out: list[int] = []
    for p in w.parts:
        out.extend(p.expand())
    return tuple(out)


def factor_aword(a: Sequence[int]) -> SigmaWord:
    """Recover the unique block decomposition of a cyclic a-word.

    The returned word starts at the first entry larger than 2, so its
    expansion is a rotation of ``a``.
    """
    a = list(a)
    n = len(a)
    if n == 0:
        raise SequenceError("empty a-word")
    if any((not isinstance(x, int)) or x < 2 for x in a):
        raise SequenceError("a-word entries must be integers >= 2")
    heavy = [i for i, x in enumerate(a) if x > 2]
    if not heavy:
        return SigmaWord([R(n)])
    start = heavy[0]
    b = a[start:] + a[:start]
    parts = []
    i = 0
    while i < n:
        k = b[i] - 2
        if i + k > n or any(x != 2 for x in b[i + 1:i + k]):
            raise SequenceError(
                f"inadmissible a-word: entry {b[i]} must be followed by {k - 1} twos"
            )
        parts.append(S(k))
        i += k
        m = 0
        while i < n and b[i] == 2:
            m += 1
            i += 1
        if m:
            parts.append(R(m))
    return SigmaWord(parts)


def canonical_rotation(w: SigmaWord) -> SigmaWord:
    """Lexicographically least rotation of the block list."""
    parts = w.parts
    best = min(parts[i:] + parts[:i] for i in range(len(parts)))
    return SigmaWord(best)


def concat(w1: SigmaWord, w2: SigmaWord) -> SigmaWord:
    try:
        return SigmaWord(w1.parts + w2.parts)
    except SequenceError as exc:
        raise SequenceError(f"cannot concatenate {w1} and {w2}: {exc}") from None


def split_simple(w: SigmaWord) -> list[SigmaWord]:
    """Cut a word into simple words ``s..s r_m``.

    The word is rotated to begin right after its last regular block, then
    cut after every regular block.
    """
    if w.rho == 0:
        raise SequenceError(f"{w} has no regular block, no simple factorization")
    last = max(i for i, p in enumerate(w.parts) if not p.is_singular)
    parts = w.parts[last + 1:] + w.parts[:last + 1]
    factors = []
    current: list[Part] = []
    for p in parts:
        current.append(p)
        if not p.is_singular:
            factors.append(SigmaWord(current))
            current = []
    return factors


class SurfaceTag(enum.Enum):
    ENOKI = "Enoki"
    ODD_IH = "OddInoueHirzebruch"
    EVEN_IH = "EvenInoueHirzebruch"
    INTERMEDIATE = "Intermediate"


@dataclass(frozen=True)
class SurfaceClass:
    tag: SurfaceTag
    cycles: int
    branches: int


def classify(w: SigmaWord) -> SurfaceClass:
    if w.N == 0:
        return SurfaceClass(SurfaceTag.ENOKI, 1, 0)
    if w.rho == 0:
        if w.N % 2:
            return SurfaceClass(SurfaceTag.ODD_IH, 1, 0)
        return SurfaceClass(SurfaceTag.EVEN_IH, 2, 0)
    return SurfaceClass(SurfaceTag.INTERMEDIATE, 1, w.rho)


def sigma_n(w: SigmaWord) -> int:
    return sum(expand(w))
