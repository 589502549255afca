import itertools
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsslattice.sequence import parse_sigma
from gsslattice.tiling import (
    ZERO,
    MarkSet,
    TilingError,
    canonical_tiling,
    compose,
    delta,
    disjoint_union,
    eval_poly,
    generating_subsets,
    is_allowed,
    mark_set,
    members,
    poly,
    specialize_zero,
    substitute_zero,
    to_mask,
)

from oracles import partition_allowed


def sets(masks):
    return {frozenset(members(m)) for m in masks}


def monomials(text):
    """'X0X1X2+X1X2+X0' -> set of variable-index sets."""
    out = set()
    for term in text.replace(" ", "").split("+"):
        out.add(frozenset(int(v) for v in term.split("X")[1:]))
    return out


def poly_monomials(P):
    return {frozenset(m) for m in P.monomials()}


def all_marksets(N):
    for mask in range(1 << N):
        yield MarkSet(N, mask)


class TestMarkSet:
    def test_regular_between(self):
        assert mark_set(parse_sigma("s2 r1 s3")).members == (0,)

    def test_no_regular(self):
        assert mark_set(parse_sigma("s2 s3")).members == ()

    def test_all_marked(self):
        assert mark_set(parse_sigma("s1 r1 s1 r1")).members == (0, 1)

    def test_wraps(self):
        assert mark_set(parse_sigma("r2 s1 s1")).members == (1,)

    def test_enoki(self):
        with pytest.raises(TilingError):
            mark_set(parse_sigma("r3"))

    def test_out_of_range(self):
        with pytest.raises(TilingError):
            MarkSet.of(2, [2])


class TestGenerating:
    def test_empty_marks(self):
        assert sets(generating_subsets(MarkSet.of(3))) == {frozenset(p) for p in ({0, 1}, {1, 2}, {2, 0})}

    def test_two_marks(self):
        assert sets(generating_subsets(MarkSet.of(3, [0, 1]))) == {frozenset(p) for p in ({0}, {1}, {2, 0})}

    def test_n1(self):
        assert sets(generating_subsets(MarkSet.of(1, [0]))) == {frozenset([0])}
        assert generating_subsets(MarkSet.of(1)) == frozenset()


class TestAllowed:
    @pytest.mark.parametrize("N", range(1, 6))
    def test_empty_and_full(self, N):
        for A in all_marksets(N):
            assert is_allowed(0, A)
            assert not is_allowed((1 << N) - 1, A)

    def test_examples(self):
        A = MarkSet.of(3, [0])
        assert not is_allowed({0, 1}, A)
        assert is_allowed({1, 2}, A)
        assert is_allowed({2, 0}, A)

    def test_outside(self):
        with pytest.raises(TilingError):
            is_allowed({3}, MarkSet.of(3))

    def test_against_partition_oracle(self):
        for N in range(1, 7):
            for A in all_marksets(N):
                for B in range(1 << N):
                    assert is_allowed(B, A) == partition_allowed(members(B), set(A.members), N)


class TestFamilies:
    def test_p1(self):
        assert {poly(A).text() for A in all_marksets(1)} == {"X0"}

    def test_p2(self):
        listed = {
            (): "X0X1",
            (0,): "X0X1+X1",
            (1,): "X0X1+X0",
            (0, 1): "X0X1+X0+X1",
        }
        for marks, text in listed.items():
            assert poly_monomials(poly(MarkSet.of(2, marks))) == monomials(text)

    def test_p3_listed(self):
        listed = {
            (): "X0X1X2+X0+X1+X2",
            (0, 1): "X0X1X2+X1X2+X0X2+X1+X2",
            (0, 1, 2): "X0X1X2+X1X2+X0X2+X0X1+X0+X1+X2",
        }
        for marks, text in listed.items():
            assert poly_monomials(poly(MarkSet.of(3, marks))) == monomials(text)

    def test_p3_single_mark(self):
        # determinant-validated form (the printed list has X2 where X1 belongs)
        P = poly(MarkSet.of(3, [0]))
        assert poly_monomials(P) == monomials("X0X1X2+X1X2+X0+X1")
        assert eval_poly(P, (1, 2, 1)) == 7

    def test_all_proper_subsets(self):
        assert len(poly(MarkSet.of(3, [0, 1, 2])).tiles) == 7

    @pytest.mark.parametrize("N", range(2, 9))
    def test_injective(self, N):
        assert len({poly(A).tiles for A in all_marksets(N)}) == 2 ** N


class TestProperties:
    @pytest.mark.parametrize("N", range(1, 9))
    def test_top_and_subtop(self, N):
        full = tuple(range(N))
        for A in all_marksets(N):
            P = poly(A)
            assert 0 in P.tiles
            assert P.degree_part(N) == [full]
            assert eval_poly(P, [0] * N) == 0
            if N >= 2:
                sub = {m for m in P.degree_part(N - 1)}
                assert sub == {tuple(i for i in full if i != a) for a in A.members}

    @pytest.mark.parametrize("N", range(1, 9))
    def test_parity(self, N):
        for P in [poly(MarkSet.of(N))]:
            assert all(bin(B).count("1") % 2 == 0 for B in P.tiles)
            assert all(len(m) % 2 == N % 2 for m in P.monomials())

    @pytest.mark.parametrize("N", range(1, 9))
    def test_rotation_equivariance(self, N):
        full = (1 << N) - 1
        rot = lambda B: ((B << 1) | (B >> (N - 1))) & full
        for A in all_marksets(N):
            assert poly(A.shifted(1)).tiles == frozenset(rot(B) for B in poly(A).tiles)


class TestEval:
    @given(st.integers(-20, 20), st.integers(-20, 20))
    def test_empty_marks_n2(self, a, b):
        assert eval_poly(poly(MarkSet.of(2)), (a, b)) == a * b

    def test_value(self):
        assert eval_poly(poly(MarkSet.of(2, [0, 1])), (2, 1)) == 5

    def test_length_mismatch(self):
        with pytest.raises(TilingError):
            eval_poly(poly(MarkSet.of(2)), (1, 2, 3))


class TestCanonicalTiling:
    def test_fixed_run(self):
        t = canonical_tiling({2, 0}, MarkSet.of(3, [0]))
        assert t.fixed_runs == (((2, 0), 1),) and t.wandering_runs == ()

    def test_wandering(self):
        t = canonical_tiling({0, 1}, MarkSet.of(3))
        assert t.fixed_runs == () and t.wandering_runs == ((0, 1),)

    def test_empty(self):
        t = canonical_tiling(0, MarkSet.of(4, [1]))
        assert t.fixed_runs == () and t.wandering_runs == ()

    def test_not_allowed(self):
        with pytest.raises(TilingError):
            canonical_tiling({0, 1}, MarkSet.of(3, [0]))

    @pytest.mark.parametrize("N", range(1, 8))
    def test_partition_properties(self, N):
        for A in all_marksets(N):
            for B in poly(A).tiles:
                t = canonical_tiling(B, A)
                runs = [r for r, _ in t.fixed_runs] + list(t.wandering_runs)
                flat = [i for r in runs for i in r]
                assert sorted(flat) == list(members(B))
                for run, spring in t.fixed_runs:
                    assert run[-1] in A
                    assert not B >> spring & 1
                    assert (spring + 1) % N == run[0]
                for run in t.wandering_runs:
                    assert len(run) % 2 == 0
                    assert not any(i in A for i in run)


class TestSpecialize:
    def test_single_mark(self):
        A = MarkSet.of(3, [0])
        assert specialize_zero(A, {0}) == MarkSet.of(2, [1])
        assert poly_monomials(substitute_zero(poly(A), {0})) == monomials("X0X1+X0")

    def test_empty_b(self):
        A = MarkSet.of(4, [1, 3])
        assert specialize_zero(A, 0) == A

    def test_to_single_variable(self):
        assert specialize_zero(MarkSet.of(3), {0, 1}) == MarkSet.of(1)

    @pytest.mark.parametrize("N", range(1, 8))
    def test_lemma(self, N):
        for A in all_marksets(N):
            P = poly(A)
            for B in P.tiles:
                A2 = specialize_zero(A, B)
                assert substitute_zero(P, B).tiles == poly(A2).tiles


class TestCompose:
    def test_two_singletons(self):
        X = poly(MarkSet.of(1, [0]))
        assert compose(X, X).tiles == poly(MarkSet.of(2, [0, 1])).tiles

    def test_zero(self):
        P = poly(MarkSet.of(3, [2]))
        assert compose(P, ZERO) == P
        assert compose(ZERO, P) == P

    def test_delta_form_random(self):
        rng = random.Random(1)
        for _ in range(200):
            n1, n2 = rng.randint(1, 4), rng.randint(1, 4)
            P1 = poly(MarkSet(n1, rng.randrange(1 << n1)))
            P2 = poly(MarkSet(n2, rng.randrange(1 << n2)))
            k = [rng.randint(-6, 9) for _ in range(n1 + n2)]
            lhs = (eval_poly(P1, k[:n1]) + 1) * (eval_poly(P2, k[n1:]) + 1)
            assert lhs == eval_poly(compose(P1, P2), k) + 1

    def test_concatenation_when_seams_marked(self):
        for n1, n2 in itertools.product(range(1, 5), repeat=2):
            for m1 in range(1 << n1):
                for m2 in range(1 << n2):
                    A1, A2 = MarkSet(n1, m1), MarkSet(n2, m2)
                    same = poly(disjoint_union(A1, A2)).tiles == compose(poly(A1), poly(A2)).tiles
                    assert same == ((n1 - 1) in A1 and (n2 - 1) in A2)


class TestDelta:
    @pytest.mark.parametrize("text, d", [("s1 r1", 2), ("s2 r1 s1 r1", 6), ("s2 s1 s1 r1", 8), ("s3", 4)])
    def test_values(self, text, d):
        assert delta(parse_sigma(text)) == d

    def test_enoki(self):
        with pytest.raises(TilingError):
            delta(parse_sigma("r2"))


class TestText:
    def test_order(self):
        assert poly(MarkSet.of(3, [0])).text() == "X0*X1*X2 + X1*X2 + X0 + X1"
        assert poly(MarkSet.of(2, [0, 1])).text() == "X0*X1 + X0 + X1"
        assert ZERO.text() == "0"

    def test_json(self):
        A = MarkSet.of(2, [0])
        assert json.loads(poly(A).to_json(A)) == {"N": 2, "A": [0], "tiles": [[], [0]]}

    def test_to_mask(self):
        assert to_mask({0, 2}) == 5 and to_mask(5) == 5
