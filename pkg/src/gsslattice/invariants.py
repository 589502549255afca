"""Discriminant, lattice index and twisting coefficient, with cross-checks.

The matrix path (jump edges -> determinant) and the tiling path
(mark set -> allowed subsets -> evaluation) share no code, so comparing
them is a real test of ``det M = P_A(k)^2``.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from math import isqrt, prod
from typing import Iterator, Sequence

from . import dual_graph, form, tiling
from .sequence import (
    Kind,
    Part,
    SequenceError,
    SigmaWord,
    SurfaceTag,
    canonical_rotation,
    classify,
    sigma_n,
    split_simple,
)

ATLAS_COLUMNS = (
    "word", "n", "N", "rho", "sigma_n", "class",
    "det", "index", "delta", "branch_dets", "poly",
)


def discriminant(w: SigmaWord) -> int:
    return form.det_exact(form.build_form(w))


def lattice_index(w: SigmaWord) -> int:
    if w.N == 0:
        raise SequenceError(f"{w}: lattice index undefined without singular blocks (det = 0)")
    return tiling.eval_poly(tiling.poly(tiling.mark_set(w)), w.singular_lengths)


def twisting_coefficient(w: SigmaWord) -> int:
    tag = classify(w).tag
    if tag is not SurfaceTag.INTERMEDIATE:
        raise SequenceError(f"{w}: twisting coefficient needs an intermediate word, got {tag.value}")
    return prod(dual_graph.branch_determinants(dual_graph.build_dual_graph(w)))


@dataclass
class InvariantReport:
    word: str
    n: int
    N: int
    rho: int
    sigma_n: int
    surface_class: str
    det: int
    index: int | None
    delta: int | None
    branch_dets: list[int]
    poly: str
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "n": self.n,
            "N": self.N,
            "rho": self.rho,
            "sigma_n": self.sigma_n,
            "class": self.surface_class,
            "det": self.det,
            "index": self.index,
            "delta": self.delta,
            "branch_dets": self.branch_dets,
            "poly": self.poly,
            "checks": self.checks,
        }

    def atlas_row(self) -> list:
        return [
            self.word, self.n, self.N, self.rho, self.sigma_n, self.surface_class,
            self.det,
            "" if self.index is None else self.index,
            "" if self.delta is None else self.delta,
            ";".join(map(str, self.branch_dets)),
            self.poly,
        ]


def _delta_from_factors(w: SigmaWord, P_value: int) -> int:
    # intermediate words: multiply over the simple factors; otherwise P + 1
    if w.rho == 0:
        return P_value + 1
    return prod(tiling.delta(f) for f in split_simple(w))


def verify_main_theorem(w: SigmaWord) -> InvariantReport:
    """Compute every invariant of ``w`` and record which identities hold."""
    w = canonical_rotation(w)
    cls = classify(w)
    M = form.build_form(w)
    det = form.det_exact(M)
    graph = dual_graph.build_dual_graph(w)
    bdets = dual_graph.branch_determinants(graph)
    checks: dict[str, bool] = {}

    checks["graph_weights_match_diagonal"] = (
        Counter(graph.adjusted_weights()) == Counter(M.diagonal())
    )
    checks["graph_det_matches_form"] = form.det_exact(dual_graph.graph_matrix(graph)) == det
    pd = form.is_positive_definite(M)

    if w.N == 0:
        checks["det_zero"] = det == 0
        checks["not_positive_definite"] = not pd
        return InvariantReport(
            str(w), w.n, 0, w.rho, sigma_n(w), cls.tag.value,
            det, None, None, bdets, tiling.ZERO.text(), checks,
        )

    A = tiling.mark_set(w)
    P = tiling.poly(A)
    index = tiling.eval_poly(P, w.singular_lengths)
    delta = _delta_from_factors(w, index)

    checks["det_equals_poly_squared"] = det == index * index
    checks["det_perfect_square"] = det >= 1 and isqrt(det) ** 2 == det
    checks["delta_equals_index_plus_one"] = delta == index + 1
    checks["positive_definite"] = pd
    if cls.tag is SurfaceTag.INTERMEDIATE:
        checks["branch_product_equals_delta"] = prod(bdets) == delta
        checks["twisting_at_least_two"] = prod(bdets) >= 2
        checks["branch_count_equals_rho"] = len(bdets) == w.rho
    if cls.tag is SurfaceTag.EVEN_IH:
        g1, g2 = dual_graph.cycle_determinants(graph)
        checks["cycle_dets_equal"] = g1 == g2
        checks["cycle_det_product_equals_det"] = g1 * g2 == det
        checks["cycle_det_equals_index"] = g1 == index

    return InvariantReport(
        str(w), w.n, w.N, w.rho, sigma_n(w), cls.tag.value,
        det, index, delta, bdets, P.text(), checks,
    )


def with_regular_lengths(w: SigmaWord, lengths: Sequence[int]) -> SigmaWord:
    if len(lengths) != w.rho:
        raise SequenceError(f"{w} has {w.rho} regular blocks, got {len(lengths)} lengths")
    it = iter(lengths)
    return SigmaWord(p if p.is_singular else Part(p.kind, next(it)) for p in w.parts)


def verify_reduction(w: SigmaWord, alt_lengths: Sequence[int]) -> bool:
    """True when changing the regular lengths leaves the discriminant unchanged."""
    if w.rho < 1:
        raise SequenceError(f"{w} has no regular block")
    return discriminant(w) == discriminant(with_regular_lengths(w, alt_lengths))


def _admissible_blocks(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """(kind, length) lists of total n that start with a singular block and
    never put two regular blocks next to each other (cyclically)."""

    def extend(prefix, remaining):
        if remaining == 0:
            if prefix[-1][0] == 1 and prefix[0][0] == 1:
                return
            yield tuple(prefix)
            return
        last_regular = prefix[-1][0] == 1
        for length in range(1, remaining + 1):
            prefix.append((0, length))
            yield from extend(prefix, remaining - length)
            prefix.pop()
            if not last_regular:
                prefix.append((1, length))
                yield from extend(prefix, remaining - length)
                prefix.pop()

    for first in range(1, n + 1):
        yield from extend([(0, first)], n - first)


def enumerate_words(max_n: int) -> Iterator[SigmaWord]:
    """Every admissible word with n <= max_n, once per rotation class.

    Ordered by n, then by the canonical block list.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    for n in range(1, max_n + 1):
        found = []
        for blocks in _admissible_blocks(n):
            if all(blocks[i:] + blocks[:i] >= blocks for i in range(1, len(blocks))):
                found.append(blocks)
        found.append(((1, n),))
        found.sort()
        for blocks in found:
            yield SigmaWord(Part(Kind(k), L) for k, L in blocks)


def atlas_rows(max_n: int) -> Iterator[InvariantReport]:
    for w in enumerate_words(max_n):
        yield verify_main_theorem(w)


def atlas(max_n: int, fmt: str = "csv") -> str:
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(ATLAS_COLUMNS)
        for report in atlas_rows(max_n):
            writer.writerow(report.atlas_row())
    elif fmt in ("jsonl", "json"):
        for report in atlas_rows(max_n):
            row = dict(zip(ATLAS_COLUMNS, report.atlas_row()))
            row["branch_dets"] = report.branch_dets
            row["index"], row["delta"] = report.index, report.delta
            buf.write(json.dumps(row) + "\n")
    else:
        raise ValueError(f"unknown atlas format {fmt!r}")
    return buf.getvalue()


def write_atlas(path, max_n: int, fmt: str = "csv") -> None:
    text = atlas(max_n, fmt)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write atlas to {path}: {exc.strerror or exc}") from exc


@dataclass
class VerifySummary:
    checked: int = 0
    reductions: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def reduction_variants(w: SigmaWord) -> list[tuple[int, ...]]:
    """Deterministic alternative regular lengths: all ones, and each length plus one."""
    if w.rho == 0:
        return []
    return [(1,) * w.rho, tuple(m + 1 for m in w.regular_lengths)]


def verify_all(max_n: int) -> VerifySummary:
    summary = VerifySummary()
    for w in enumerate_words(max_n):
        report = verify_main_theorem(w)
        summary.checked += 1
        for name in report.failed():
            summary.failures.append((report.word, name))
        for alt in reduction_variants(w):
            summary.reductions += 1
            if not verify_reduction(w, alt):
                summary.failures.append((str(w), f"reduction{list(alt)}"))
    summary.failures.sort()
    return summary
