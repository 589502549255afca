"""Weighted dual graph of the curve configuration.

Enoki words give one cycle of twos, Inoue-Hirzebruch words one cycle
(odd number of blocks) or two (even), and intermediate words one cycle
with a branch hanging off it for every regular block.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .form import chain_det, cycle_det
from .sequence import SigmaWord, SurfaceClass, SurfaceTag, canonical_rotation, classify


@dataclass(frozen=True)
class Branch:
    # weights run from the free tip to the vertex adjacent to the root
    weights: tuple[int, ...]
    root: int  # index into the (single) cycle


@dataclass(frozen=True)
class DualGraph:
    cycles: tuple[tuple[int, ...], ...]
    branches: tuple[Branch, ...]
    surface_class: SurfaceClass

    @property
    def n_vertices(self) -> int:
        return sum(map(len, self.cycles)) + sum(len(b.weights) for b in self.branches)

    def adjusted_weights(self) -> list[int]:
        """Vertex weights with 2 subtracted at self-looped vertices (length-1 cycles)."""
        out = []
        for c in self.cycles:
            out.extend([c[0] - 2] if len(c) == 1 else c)
        for b in self.branches:
            out.extend(b.weights)
        return out

    def to_dict(self) -> dict:
        return {
            "cycles": [list(c) for c in self.cycles],
            "branches": [{"weights": list(b.weights), "root": b.root} for b in self.branches],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _alternate(ks, heavy_first: bool) -> list[int]:
    """Blocks alternately contribute one heavy vertex k+2 or k-1 twos."""
    out: list[int] = []
    for i, k in enumerate(ks):
        if (i % 2 == 0) == heavy_first:
            out.append(k + 2)
        else:
            out.extend([2] * (k - 1))
    return out


def _segment(l: int, ks: list[int]) -> tuple[list[int], list[int]]:
    """Branch and cycle piece for a run ``r_l s_k1 ... s_kp``."""
    branch = _alternate(ks, heavy_first=False)
    piece = [2] * (l - 1) + _alternate(ks, heavy_first=True)
    if len(ks) % 2:
        branch.append(2)
    else:
        piece.append(2)
    return branch, piece


def build_dual_graph(w: SigmaWord) -> DualGraph:
    cls = classify(w)
    if cls.tag is SurfaceTag.ENOKI:
        return DualGraph(((2,) * w.n,), (), cls)

    w = canonical_rotation(w)
    if cls.tag is SurfaceTag.EVEN_IH:
        ks = list(w.singular_lengths)
        cycles = (tuple(_alternate(ks, True)), tuple(_alternate(ks, False)))
        return DualGraph(cycles, (), cls)
    if cls.tag is SurfaceTag.ODD_IH:
        ks = list(w.singular_lengths)
        return DualGraph((tuple(_alternate(ks + ks, True)),), (), cls)

    first = next(i for i, p in enumerate(w.parts) if not p.is_singular)
    parts = w.parts[first:] + w.parts[:first]
    segments: list[tuple[int, list[int]]] = []
    for p in parts:
        if p.is_singular:
            segments[-1][1].append(p.length)
        else:
            segments.append((p.length, []))

    cycle: list[int] = []
    starts = []
    raw_branches = []
    for l, ks in segments:
        branch, piece = _segment(l, ks)
        starts.append(len(cycle))
        cycle.extend(piece)
        raw_branches.append(branch)
    rho = len(segments)
    branches = tuple(
        Branch(tuple(b), starts[(s + 1) % rho]) for s, b in enumerate(raw_branches)
    )
    return DualGraph((tuple(cycle),), branches, cls)


def branch_determinants(g: DualGraph) -> list[int]:
    return [chain_det(b.weights) for b in g.branches]


def cycle_determinants(g: DualGraph) -> list[int]:
    return [cycle_det(c) for c in g.cycles]


def graph_matrix(g: DualGraph) -> list[list[int]]:
    """Positive-convention matrix of the whole graph (cycles first, then branches)."""
    n = g.n_vertices
    m = [[0] * n for _ in range(n)]
    offset = 0
    cycle_offsets = []
    for c in g.cycles:
        L = len(c)
        cycle_offsets.append(offset)
        for i, wt in enumerate(c):
            m[offset + i][offset + i] = wt
        if L == 1:
            m[offset][offset] -= 2
        else:
            for i in range(L):
                a, b = offset + i, offset + (i + 1) % L
                m[a][b] -= 1
                m[b][a] -= 1
        offset += L
    for br in g.branches:
        L = len(br.weights)
        for i, wt in enumerate(br.weights):
            m[offset + i][offset + i] = wt
        for i in range(L - 1):
            m[offset + i][offset + i + 1] = m[offset + i + 1][offset + i] = -1
        last, root = offset + L - 1, cycle_offsets[0] + br.root
        m[last][root] = m[root][last] = -1
        offset += L
    return m


def to_dot(g: DualGraph, name: str = "dual_graph") -> str:
    lines = [f'digraph "{name}" {{']
    for ci, c in enumerate(g.cycles):
        for vi, wt in enumerate(c):
            lines.append(f'  c{ci}_{vi} [label="{wt}", shape=circle];')
    for bi, br in enumerate(g.branches):
        for vi, wt in enumerate(br.weights):
            lines.append(f'  b{bi}_{vi} [label="{wt}", shape=box];')
    for ci, c in enumerate(g.cycles):
        L = len(c)
        for vi in range(L):
            lines.append(f"  c{ci}_{vi} -> c{ci}_{(vi + 1) % L};")
    for bi, br in enumerate(g.branches):
        for vi in range(len(br.weights) - 1):
            lines.append(f"  b{bi}_{vi} -> b{bi}_{vi + 1};")
        lines.append(f"  b{bi}_{len(br.weights) - 1} -> c0_{br.root};")
    lines.append("}")
    return "\n".join(lines) + "\n"
