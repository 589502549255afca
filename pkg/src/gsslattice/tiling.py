"""Polynomials indexed by a mark set on Z/NZ.

For ``A`` a subset of Z/NZ, a subset ``B`` of Z/NZ is *allowed* when it is a
proper subset that can be tiled by singletons ``{a}`` with ``a`` in ``A`` and
adjacent pairs ``{k, k+1}`` with ``k`` not in ``A``.  The polynomial ``P_A``
has one unit monomial ``prod_{i not in B} X_i`` per allowed ``B``.

Subsets are stored as bit masks (bit i set <=> i in the subset).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .sequence import SigmaWord

MAX_N = 24

Subset = Union[int, Iterable[int]]


class TilingError(ValueError):
    pass


def to_mask(B: Subset) -> int:
    if isinstance(B, int):
        return B
    mask = 0
    for i in B:
        mask |= 1 << i
    return mask


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class MarkSet:
    N: int
    mask: int

    def __post_init__(self):
        if self.N < 1:
            raise TilingError("mark sets live on Z/NZ with N >= 1")
        if self.mask >> self.N:
            raise TilingError(f"marks outside 0..{self.N - 1}")

    @classmethod
    def of(cls, N: int, marks: Iterable[int] = ()) -> MarkSet:
        marks = list(marks)
        if any(not 0 <= a < N for a in marks):
            raise TilingError(f"marks {marks} outside 0..{N - 1}")
        return cls(N, to_mask(marks))

    @property
    def members(self) -> tuple[int, ...]:
        return members(self.mask)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> (i % self.N) & 1)

    def shifted(self, by: int = 1) -> MarkSet:
        return MarkSet.of(self.N, ((a + by) % self.N for a in self.members))


def mark_set(w: SigmaWord) -> MarkSet:
    """Singular blocks, numbered in word order, that are followed by a regular block."""
    if w.N == 0:
        raise TilingError(f"{w} has no singular block")
    parts = w.parts
    marks = []
    j = 0
    for i, p in enumerate(parts):
        if p.is_singular:
            if not parts[(i + 1) % len(parts)].is_singular:
                marks.append(j)
            j += 1
    return MarkSet.of(w.N, marks)


def generating_subsets(A: MarkSet) -> frozenset[int]:
    N = A.N
    full = (1 << N) - 1
    gens = {1 << a for a in A.members}
    if N >= 2:
        for k in range(N):
            if k not in A:
                pair = (1 << k) | (1 << ((k + 1) % N))
                if pair != full:
                    gens.add(pair)
    return frozenset(gens)


def _runs(mask: int, N: int) -> list[list[int]]:
    """Maximal cyclic runs of consecutive members of a proper, nonempty subset."""
    runs = []
    for i in range(N):
        if mask >> i & 1 and not mask >> ((i - 1) % N) & 1:
            run = [i]
            j = (i + 1) % N
            while mask >> j & 1:
                run.append(j)
                j = (j + 1) % N
            runs.append(run)
    return runs


def _run_tileable(run: Sequence[int], A: MarkSet) -> bool:
    # linear DP from the right end: ok[t] <=> run[t:] tileable
    L = len(run)
    ok = [False] * (L + 1)
    ok[L] = True
    for t in range(L - 1, -1, -1):
        if run[t] in A:
            ok[t] = ok[t + 1]
        elif t + 1 < L:
            ok[t] = ok[t + 2]
    return ok[0]


def is_allowed(B: Subset, A: MarkSet) -> bool:
    N = A.N
    mask = to_mask(B)
    full = (1 << N) - 1
    if mask & ~full:
        raise TilingError("subset not contained in Z/NZ")
    if mask == full:
        return False
    return all(_run_tileable(run, A) for run in _runs(mask, N))


@dataclass(frozen=True)
class TilePolynomial:
    """Sum over tiles B of prod_{i not in B} X_i, every coefficient 1."""

    N: int
    tiles: frozenset[int]

    def monomials(self) -> list[tuple[int, ...]]:
        full = (1 << self.N) - 1
        keyed = sorted((bin(B).count("1"), members(full & ~B)) for B in self.tiles)
        return [m for _, m in keyed]

    def degree_part(self, d: int) -> list[tuple[int, ...]]:
        return [m for m in self.monomials() if len(m) == d]

    def text(self) -> str:
        terms = ["*".join(f"X{i}" for i in m) for m in self.monomials()]
        return " + ".join(terms) if terms else "0"

    def to_dict(self, A: MarkSet | None = None) -> dict:
        d = {"N": self.N}
        if A is not None:
            d["A"] = list(A.members)
        d["tiles"] = [list(members(B)) for B in sorted(self.tiles, key=lambda b: (bin(b).count("1"), members(b)))]
        return d

    def to_json(self, A: MarkSet | None = None) -> str:
        return json.dumps(self.to_dict(A))

    def __str__(self) -> str:
        return self.text()


ZERO = TilePolynomial(0, frozenset())


@lru_cache(maxsize=4096)
def _poly(N: int, mask: int) -> TilePolynomial:
    A = MarkSet(N, mask)
    full = (1 << N) - 1
    tiles = frozenset(B for B in range(full) if is_allowed(B, A))
    return TilePolynomial(N, tiles)


def poly(A: MarkSet) -> TilePolynomial:
    if A.N > MAX_N:
        raise TilingError(f"N = {A.N} exceeds the enumeration cap {MAX_N}")
    return _poly(A.N, A.mask)


def allowed_subsets(A: MarkSet) -> frozenset[int]:
    return poly(A).tiles


def eval_poly(P: TilePolynomial, k: Sequence[int]) -> int:
    if len(k) != P.N:
        raise TilingError(f"expected {P.N} values, got {len(k)}")
    total = 0
    for B in P.tiles:
        term = 1
        for i, ki in enumerate(k):
            if not B >> i & 1:
                term *= ki
        total += term
    return total


@dataclass(frozen=True)
class CanonicalTiling:
    fixed_runs: tuple[tuple[tuple[int, ...], int], ...]  # (run, spring)
    wandering_runs: tuple[tuple[int, ...], ...]

    @property
    def springs(self) -> frozenset[int]:
        return frozenset(s for _, s in self.fixed_runs)


def canonical_tiling(B: Subset, A: MarkSet) -> CanonicalTiling:
    """Split an allowed subset into runs fixed to a mark and wandering runs.

    In each maximal run of B, the prefix up to its last mark is fixed and
    its spring is the index just before the run; the remainder is wandering.
    """
    mask = to_mask(B)
    if not is_allowed(mask, A):
        raise TilingError(f"{members(mask)} is not allowed for A = {A.members}")
    N = A.N
    fixed = []
    wandering = []
    for run in _runs(mask, N):
        marked = [t for t, i in enumerate(run) if i in A]
        if marked:
            t = marked[-1]
            fixed.append((tuple(run[:t + 1]), (run[0] - 1) % N))
            tail = run[t + 1:]
        else:
            tail = run
        if tail:
            wandering.append(tuple(tail))
    fixed.sort(key=lambda r: r[0][0])
    wandering.sort()
    return CanonicalTiling(tuple(fixed), tuple(wandering))


def specialize_zero(A: MarkSet, B: Subset) -> MarkSet:
    """Mark set of P_A with the variables of an allowed B set to zero.

    The surviving indices are relabelled 0..N'-1 in increasing order.
    """
    mask = to_mask(B)
    tiling = canonical_tiling(mask, A)
    rest = [i for i in range(A.N) if not mask >> i & 1]
    relabel = {i: t for t, i in enumerate(rest)}
    marks = {relabel[a] for a in A.members if a in relabel}
    marks |= {relabel[s] for s in tiling.springs}
    return MarkSet.of(len(rest), marks)


def substitute_zero(P: TilePolynomial, B: Subset) -> TilePolynomial:
    """P with X_i = 0 for i in B, on the remaining variables relabelled in order."""
    mask = to_mask(B)
    rest = [i for i in range(P.N) if not mask >> i & 1]
    tiles = set()
    for C in P.tiles:
        if C & mask == mask:
            tiles.add(to_mask(t for t, i in enumerate(rest) if C >> i & 1))
    return TilePolynomial(len(rest), frozenset(tiles))


def compose(P1: TilePolynomial, P2: TilePolynomial) -> TilePolynomial:
    """P1*P2 + P1 + P2, with P2 on the variables following those of P1."""
    N1, N2 = P1.N, P2.N
    full1 = (1 << N1) - 1
    full2 = ((1 << N2) - 1) << N1
    tiles = {b1 | (b2 << N1) for b1 in P1.tiles for b2 in P2.tiles}
    tiles |= {b1 | full2 for b1 in P1.tiles}
    tiles |= {full1 | (b2 << N1) for b2 in P2.tiles}
    return TilePolynomial(N1 + N2, frozenset(tiles))


def disjoint_union(A1: MarkSet, A2: MarkSet) -> MarkSet:
    return MarkSet(A1.N + A2.N, A1.mask | (A2.mask << A1.N))


def delta(w: SigmaWord) -> int:
    """Twisting coefficient: P_A(k) + 1 for the word's mark set and singular lengths."""
    return eval_poly(poly(mark_set(w)), w.singular_lengths) + 1
