"""Bifurcation sets, basic/Farey parameter intervals, and the doubling-map
correspondence.

Parameter intervals are keyed by the generator a (the maximal rotation),
with endpoints given symbolically: alpha(beta_L) = (a)^inf and
alpha(beta_R) = a+ (s)^inf where s is the Lyndon rotation of a.  Endpoint
comparisons are done on those sequences, which is exact because
beta -> alpha(beta) is an order isomorphism.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (DegenerateFarey, NotFarey, NotFareyReflection,
                     NotInQ, NotLyndon, NotMaximalRotation,
                     UndecidableAtPrecision)
from .sequences import EpSequence, lex_compare_ep, is_in_Q
from .numeric import BetaSpec, iv_le, iv_lt, mp
from . import words as W
from . import numeric as N


def in_E_plus(t, alpha):
    """t belongs to the bifurcation set E+: every shift of t lies between
    t itself (non-strict) and alpha (strict)."""
    if not is_in_Q(alpha):
        raise NotInQ("upper bound must be an expansion of 1")
    for s in t.shifts():
        if lex_compare_ep(s, t) < 0:
            return False
        if lex_compare_ep(s, alpha) >= 0:
            return False
    return True


def in_E_zero(t, alpha):
    """t has a 0-tail and satisfies the E+ conditions before the tail."""
    if not is_in_Q(alpha):
        raise NotInQ("upper bound must be an expansion of 1")
    if not t.is_zero_tail():
        return False
    for k in range(len(t.pre)):
        s = t.shift(k)
        if lex_compare_ep(t, s) > 0:
            return False
        if lex_compare_ep(s, alpha) >= 0:
            return False
    return True


@dataclass(frozen=True)
class IntervalRecord:
    generator: str
    lyndon: str
    alpha_L: EpSequence
    alpha_R: EpSequence
    kind: str  # "basic" | "farey"

    @property
    def beta_L(self):
        return BetaSpec(alpha=self.alpha_L)

    @property
    def beta_R(self):
        return BetaSpec(alpha=self.alpha_R)


def basic_interval(a):
    """The parameter interval (beta_L, beta_R] on which the periodic orbit
    of the Lyndon rotation of a is isolated in E+."""
    W.check_word(a)
    if "0" not in a or "1" not in a:
        raise NotMaximalRotation("degenerate generator %r" % a)
    if not W.is_aperiodic(a):
        raise NotMaximalRotation("%r is not primitive" % a)
    if W.max_rotation(a) != a:
        raise NotMaximalRotation("%r is not maximal among its rotations" % a)
    alpha_L = EpSequence("", a)
    if not is_in_Q(alpha_L):
        raise NotInQ("(%s)^inf is not an expansion of 1" % a)
    s, _ = W.lyndon_rotation(a)
    alpha_R = EpSequence(W.plus(a), s)
    if not is_in_Q(alpha_R):
        raise NotInQ("right endpoint sequence fails the shift condition")
    kind = "farey" if W.is_farey(W.reflect(a)) and \
        W.reflect(a) not in ("0", "1") else "basic"
    return IntervalRecord(a, s, alpha_L, alpha_R, kind)


def farey_interval(a):
    """basic_interval(a), insisting that reflect(a) is a non-degenerate
    Farey word; for these the Lyndon rotation is the reversal of a."""
    r = W.reflect(a)
    if r in ("0", "1") or not W.is_farey(r):
        raise NotFareyReflection("reflect(%r) = %r is not Farey" % (a, r))
    rec = basic_interval(a)
    assert rec.lyndon == a[::-1]
    return rec


def classify_isolated(t_period, beta):
    """Where beta falls relative to the basic interval of t_period's
    maximal rotation: "not_in_E_plus" (left of it), "isolated" (inside),
    or "not_isolated" (right of it)."""
    if not W.is_lyndon(t_period):
        raise NotLyndon("%r is not Lyndon" % t_period)
    rec = basic_interval(W.max_rotation(t_period))
    bL = rec.beta_L.value
    bR = rec.beta_R.value
    b = beta.value
    c = iv_le(b, bL)
    if c is True:
        return "not_in_E_plus"
    if c is None:
        raise UndecidableAtPrecision("beta within bracket of beta_L")
    c = iv_le(b, bR)
    if c is True:
        return "isolated"
    if c is None:
        raise UndecidableAtPrecision("beta within bracket of beta_R")
    return "not_isolated"


def nesting_relation(i1, i2):
    """Relation of two parameter intervals (beta_L, beta_R]: "equal",
    "disjoint", "first_inside_second" or "second_inside_first".

    Decided symbolically on the endpoint alpha-sequences.  A partial
    overlap would contradict the laminar structure and raises AssertionError.
    """
    l1l2 = lex_compare_ep(i1.alpha_L, i2.alpha_L)
    r1r2 = lex_compare_ep(i1.alpha_R, i2.alpha_R)
    if l1l2 == 0 and r1r2 == 0:
        return "equal"
    if lex_compare_ep(i1.alpha_R, i2.alpha_L) <= 0 or \
            lex_compare_ep(i2.alpha_R, i1.alpha_L) <= 0:
        return "disjoint"
    if l1l2 >= 0 and r1r2 <= 0:
        return "first_inside_second"
    if l1l2 <= 0 and r1r2 >= 0:
        return "second_inside_first"
    raise AssertionError(
        "intervals %s and %s overlap without nesting" %
        (i1.generator, i2.generator))


@dataclass(frozen=True)
class DoublingInterval:
    word: str
    q_L: Fraction
    q_R: Fraction


def pi2_fraction(seq):
    """Exact binary value of an eventually periodic sequence."""
    k = len(seq.pre)
    p = len(seq.per)
    head = Fraction(int(seq.pre, 2) if seq.pre else 0, 2 ** k)
    tail = Fraction(int(seq.per, 2), (2 ** p - 1) * 2 ** k)
    return head + tail


def doubling_interval(w):
    """The doubling-map parameter interval (q_L, q_R) attached to a
    non-degenerate Farey word w."""
    if w in ("0", "1"):
        raise NotFarey("degenerate word %r" % w)
    if not W.is_farey(w):
        raise NotFarey("%r is not a Farey word" % w)
    q_R = pi2_fraction(EpSequence("", w))
    q_L = pi2_fraction(EpSequence("", w[::-1])) - Fraction(1, 2)
    assert q_L < q_R
    return DoublingInterval(w, q_L, q_R)


def phi(beta, horizon=N.DEFAULT_HORIZON):
    """pi_2(alpha(beta)): exact Fraction when alpha is known symbolically,
    else a certified interval bracket."""
    if beta.symbolic:
        return pi2_fraction(beta.alpha)
    seq = beta.alpha_sequence(horizon)
    if seq is not None:
        return pi2_fraction(seq)
    digits, _ = beta.alpha_prefix(horizon)
    lo = N.to_iv(pi2_fraction(EpSequence(digits, "0")))
    hi = N.to_iv(pi2_fraction(EpSequence(digits, "1")))
    return N.iv.mpf([lo.a, hi.b])


def generators(max_len):
    """All interval generators (maximal rotations of aperiodic words using
    both digits) with length between 2 and max_len."""
    out = []
    for m in range(2, max_len + 1):
        seen = set()
        for i in range(1, 2 ** m - 1):
            w = format(i, "0%db" % m)
            if not W.is_aperiodic(w):
                continue
            a = W.max_rotation(w)
            if a not in seen:
                seen.add(a)
                out.append(a)
    return out


def atlas(max_len, kind="all"):
    """All basic (or only Farey) interval records with generator length
    up to max_len, sorted by left endpoint."""
    recs = []
    for a in generators(max_len):
        rec = basic_interval(a)
        if kind == "farey" and rec.kind != "farey":
            continue
        recs.append(rec)
    recs.sort(key=lambda r: r.alpha_L.prefix(2 * max_len + 4))
    return recs


def zero_run_flag(beta, horizon=N.DEFAULT_HORIZON):
    """Heuristic: max run of 0s in the first `horizon` digits of
    alpha(beta).  Bounded runs over a long horizon suggest (but never
    prove, for numeric beta) the bounded-zero-run kneading class."""
    digits, _ = beta.alpha_prefix(horizon)
    runs = [len(r) for r in digits.split("1") if r]
    return max(runs) if runs else 0


def atlas_json(recs, digits=12):
    """Plain-dict form of an atlas, with decimal endpoints."""
    out = []
    for r in recs:
        out.append({
            "generator": r.generator,
            "lyndon": r.lyndon,
            "beta_L": mp.nstr(N.iv_mid(r.beta_L.value), digits + 2),
            "beta_R": mp.nstr(N.iv_mid(r.beta_R.value), digits + 2),
            "kind": r.kind,
            "alpha_L": str(r.alpha_L),
            "alpha_R": str(r.alpha_R),
        })
    return out
