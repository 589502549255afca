"""The symmetric integer form attached to a cyclic word.

Entries use the positive convention; the intersection matrix of the curves
is the negation (``sign="surface"`` in the exporters).
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .sequence import SigmaWord, expand

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IntersectionForm:
    entries: Matrix

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def negated(self) -> IntersectionForm:
        return IntersectionForm(tuple(tuple(-x for x in row) for row in self.entries))

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def jump_edges(a: Sequence[int]) -> Counter:
    """One edge ``{i, i + a_i - 1}`` per index, as a multiset of sorted pairs.

    A curve with ``a_i = k + 2`` meets the curve ``k + 1`` steps later;
    indices are cyclic, so an index may be joined to itself.
    """
    n = len(a)
    edges: Counter = Counter()
    for i, ai in enumerate(a):
        j = (i + ai - 1) % n
        edges[(min(i, j), max(i, j))] += 1
    return edges


def build_form(w: SigmaWord) -> IntersectionForm:
    a = expand(w)
    n = len(a)
    m = [list(row) for row in _zeros(n)]
    for i, ai in enumerate(a):
        m[i][i] = ai
    for (i, j), mult in jump_edges(a).items():
        if i == j:
            m[i][i] -= 2 * mult
        else:
            m[i][j] -= mult
            m[j][i] -= mult
    return IntersectionForm(tuple(tuple(row) for row in m))


def _zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def _rows(M) -> list[list[int]]:
    if isinstance(M, IntersectionForm):
        return M.tolist()
    return [list(row) for row in M]


def det_exact(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = _rows(M)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_minors(M) -> list[Fraction]:
    """Leading principal minors via rational Gaussian elimination without pivoting."""
    rows = _rows(M)
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    minors = []
    running = Fraction(1)
    for k in range(n):
        pivot = a[k][k]
        running *= pivot
        minors.append(running)
        if pivot == 0:
            # later minors cannot be read off without pivoting
            for r in range(k + 1, n):
                minors.append(Fraction(det_exact([row[:r + 1] for row in rows[:r + 1]])))
            return minors
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return minors


def is_positive_definite(M) -> bool:
    return all(m > 0 for m in leading_minors(M))


def chain_det(weights: Sequence[int]) -> int:
    """Determinant of the chain matrix diag(weights) with -1 off the diagonal."""
    if not weights:
        raise ValueError("chain_det needs at least one weight")
    d_prev, d = 1, weights[0]
    for w in weights[1:]:
        d_prev, d = d, w * d - d_prev
    return d


def cycle_matrix(weights: Sequence[int]) -> list[list[int]]:
    """Matrix of a weighted cycle; length 1 is a self-loop, length 2 a double edge."""
    L = len(weights)
    if L == 0:
        raise ValueError("cycle needs at least one vertex")
    m = [[0] * L for _ in range(L)]
    for i, w in enumerate(weights):
        m[i][i] = w
    if L == 1:
        m[0][0] -= 2
    else:
        for i in range(L):
            j = (i + 1) % L
            m[i][j] -= 1
            m[j][i] -= 1
    return m


def cycle_det(weights: Sequence[int]) -> int:
    return det_exact(cycle_matrix(weights))


# -- export ---------------------------------------------------------------

def _signed(M: IntersectionForm, sign: str) -> list[list[int]]:
    if sign == "form":
        return M.tolist()
    if sign == "surface":
        return M.negated().tolist()
    raise ValueError(f"sign must be 'form' or 'surface', not {sign!r}")


def to_json(M: IntersectionForm, sign: str = "form") -> str:
    return json.dumps(_signed(M, sign))


def to_csv(M: IntersectionForm, sign: str = "form") -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(_signed(M, sign))
    return buf.getvalue()


def to_latex(M: IntersectionForm, sign: str = "form") -> str:
    rows = [" & ".join(str(x) for x in row) for row in _signed(M, sign)]
    return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}\n"
