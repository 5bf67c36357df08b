"""Subshift compilation, counting, entropy and dimension brackets."""

import math
import random

import pytest

from betahole.sequences import EpSequence, lex_compare_ep
from betahole.survivor import (LexSubshift, PointSpec, compile, count_words,
                               count_words_brute, dimension, entropy,
                               membership, reduce_upper)
from betahole.numeric import BetaSpec

E = EpSequence.parse

FULL = LexSubshift(E("(0)"), E("(1)"))
GOLDEN_MEAN = LexSubshift(E("(0)"), E("(10)"))


def test_full_shift():
    assert count_words(FULL, 5) == 32
    br = entropy(FULL)
    assert br.lower_bound <= 1 <= br.upper_bound
    assert br.upper_bound - br.lower_bound < 1e-9


def test_golden_mean_shift_counts_are_fibonacci():
    fib = [2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377]
    for n, f in enumerate(fib, start=1):
        assert count_words(GOLDEN_MEAN, n) == f
        assert count_words_brute(GOLDEN_MEAN, n) == f


def test_golden_mean_entropy():
    br = entropy(GOLDEN_MEAN)
    h = math.log2((1 + math.sqrt(5)) / 2)
    assert br.lower_bound <= h <= br.upper_bound
    assert br.upper_bound - br.lower_bound < 1e-9
    assert br.method == "automaton_exact"


def test_two_cycle_shift_has_entropy_zero():
    sh = LexSubshift(E("(01)"), E("(10)"))
    br = entropy(sh)
    assert br.upper_bound == 0.0
    assert not br.empty


def test_empty_shift():
    sh = LexSubshift(E("(10)"), E("(01)"))
    assert count_words(sh, 4) == 0
    br = entropy(sh)
    assert br.empty and br.upper_bound == 0.0


def random_subshift(rng):
    def seq():
        pre = "".join(rng.choice("01") for _ in range(rng.randint(0, 4)))
        per = "".join(rng.choice("01") for _ in range(rng.randint(1, 6)))
        return EpSequence(pre, per)
    lo, up = seq(), seq()
    if lex_compare_ep(lo, up) > 0:
        lo, up = up, lo
    return LexSubshift(lo, up)


def test_automaton_matches_brute_force():
    """Oracle equivalence on 20 seeded random constraint pairs, n <= 12."""
    rng = random.Random(20130517)
    for _ in range(20):
        sh = random_subshift(rng)
        auto = compile(sh)
        for n in range(1, 13):
            assert auto.count_paths(n) == count_words_brute(sh, n), sh


def test_counts_are_submultiplicative():
    rng = random.Random(7)
    shifts = [GOLDEN_MEAN] + [random_subshift(rng) for _ in range(5)]
    for sh in shifts:
        c = {n: count_words(sh, n) for n in range(1, 13)}
        for m in range(1, 7):
            for n in range(1, 13 - m):
                assert c[m + n] <= max(c[m] * c[n], 0)


def test_counting_upper_bounds_nest():
    c = [count_words(GOLDEN_MEAN, n) for n in range(1, 13)]
    bounds = [math.log2(c[n - 1]) / n for n in range(1, 13)]
    running = [min(bounds[:k + 1]) for k in range(len(bounds))]
    assert running == sorted(running, reverse=True)


def test_reduce_upper_fires_and_preserves_counts():
    # upper (10)^inf with lower (01)^inf: sigma(alpha) = (01)^inf <= lower,
    # so the strict bound collapses to the non-strict cycle (10^-) = (10)...
    fired = 0
    rng = random.Random(99)
    candidates = [LexSubshift(E("(01)"), E("(10)")),
                  LexSubshift(E("01(10)"), E("(10)")),
                  LexSubshift(E("(100)"), E("(101)")),
                  LexSubshift(E("(0011)"), E("(1100)"))]
    # the reduction is justified when the upper bound is an expansion of 1
    from betahole.sequences import is_in_Q
    candidates += [sh for sh in (random_subshift(rng) for _ in range(60))
                   if is_in_Q(sh.upper)]
    for sh in candidates:
        red = reduce_upper(sh)
        if red is sh:
            continue
        fired += 1
        assert not red.strict_upper
        for n in range(1, 11):
            assert count_words_brute(sh, n) >= 0  # both sides defined
        # the reduction claims equal survivor sets; spot-check membership
        # of all short periodic sequences
        for per in ["0", "1", "01", "10", "001", "011", "010", "110"]:
            x = EpSequence("", per)
            assert membership(x, sh) == membership(x, red), (sh, per)
    assert fired >= 2


def test_reduce_upper_leaves_full_shift_alone():
    assert reduce_upper(FULL) is FULL
    # beta=2 with lower (10)^inf: m=1 needs sigma(1^inf) <= (10)^inf, false
    sh = LexSubshift(E("(10)"), E("(1)"))
    assert reduce_upper(sh) is sh


def test_membership():
    assert membership(E("(0)"), GOLDEN_MEAN)
    assert membership(E("10(0)"), GOLDEN_MEAN)
    # (01)^inf is excluded: its shift hits the strict bound (10)^inf
    assert not membership(E("(01)"), GOLDEN_MEAN)
    assert not membership(E("(011)"), GOLDEN_MEAN)   # contains 11
    assert not membership(E("(10)"), GOLDEN_MEAN)    # hits the strict bound
    assert not membership(E("(0)"), LexSubshift(E("(01)"), E("(10)")))


def test_dimension_at_zero_is_one():
    for bs in ["@(10)", "@(110)", "2"]:
        rep = dimension(BetaSpec.parse(bs), PointSpec(value=0.0))
        assert rep.dim_lower > 1 - 1e-6
        assert rep.dim_upper <= 1


def test_dimension_doubling_map_values():
    rep = dimension(BetaSpec.parse("2"), PointSpec(value=0.5))
    assert rep.dim_upper < 1e-9
    rep = dimension(BetaSpec.parse("2"), PointSpec(value=0.25))
    h = math.log2((1 + math.sqrt(5)) / 2)
    assert abs(rep.dim_lower - h) < 1e-9
    assert abs(rep.dim_upper - h) < 1e-9


def test_dimension_monotone_in_t():
    for bs in ["@(10)", "@(110)"]:
        beta = BetaSpec.parse(bs)
        prev = None
        for i in range(16):
            t = 0.4 * i / 15
            rep = dimension(beta, PointSpec(value=t))
            width = rep.dim_upper - rep.dim_lower
            if prev is not None:
                assert rep.dim_upper <= prev + 2 * width + 1e-9
            prev = rep.dim_upper
