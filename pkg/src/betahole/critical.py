"""The critical hole size tau_beta and the machinery around it:
Z-set enumeration with a finiteness certificate, the t_N approximant
family, left-endpoint emptiness, and the TauReport regimes.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (AtlasInconclusive, FinitenessCertificateFailed,
                     NotFareyReflection)
from .sequences import EpSequence, lex_compare_ep
from .survivor import LexSubshift, SubshiftAutomaton, compile
from . import bifurcation as B
from . import words as W
from . import numeric as N
from .numeric import iv, mp, iv_lt, iv_le, iv_mid


def _require_farey_generator(a):
    r = W.reflect(a)
    if r in ("0", "1") or not W.is_farey(r):
        raise NotFareyReflection(
            "reflect(%r) = %r is not a non-degenerate Farey word" % (a, r))


def _cycle_structure(auto):
    """Certify that the live part of the automaton carries only finitely
    many infinite paths, and return (live, cycle_info).

    The certificate: every recurrent class is a simple cycle with no exit
    edges into the live part, so an infinite path consists of a finite
    transient prefix followed by one committed cycle.  cycle_info maps
    each cycle state to the periodic digit word read around its cycle.
    """
    live = auto.live_states()
    comps = auto.sccs(live)
    in_cycle = {}
    for comp in comps:
        cset = set(comp)
        nontrivial = len(comp) > 1 or any(
            t == comp[0] for t in auto.transitions[comp[0]] if t is not None)
        if not nontrivial:
            continue
        # each state must have exactly one live outgoing edge, inside the comp
        succ = {}
        for s in comp:
            outs = [(d, t) for d, t in enumerate(auto.transitions[s])
                    if t is not None and t in live]
            if len(outs) != 1 or outs[0][1] not in cset:
                return None, None
            succ[s] = outs[0]
        # walk the cycle from each entry point to read its digit word
        for s0 in comp:
            word = []
            s = s0
            while True:
                d, t = succ[s]
                word.append(str(d))
                s = t
                if s == s0:
                    break
            in_cycle[s0] = "".join(word)
    return live, in_cycle


def _enumerate_paths(auto, live, in_cycle):
    """All infinite-path labels: finite transient prefixes into cycles."""
    out = set()
    stack = [(auto.start, "")]
    while stack:
        s, prefix = stack.pop()
        if s in in_cycle:
            out.add(EpSequence(prefix, in_cycle[s]))
            continue
        for d, t in enumerate(auto.transitions[s]):
            if t is not None and t in live:
                stack.append((t, prefix + str(d)))
    return sorted(out, key=lambda e: (e.pre, e.per))


def z_set(a):
    """All sequences whose every shift lies between s0^infinity and
    (a)^infinity (both bounds inclusive), s the Lyndon rotation of a.

    Finite for every generator whose reflection is Farey; the finiteness
    certificate (recurrent classes are bare cycles on the rotation orbit
    of a) is checked, not assumed.
    """
    _require_farey_generator(a)
    s, _ = W.lyndon_rotation(a)
    shift = LexSubshift(EpSequence(s, "0"), EpSequence("", a),
                        strict_lower=False, strict_upper=False)
    auto = compile(shift)
    live, in_cycle = _cycle_structure(auto)
    if in_cycle is None:
        raise FinitenessCertificateFailed(
            "recurrent part for %r is not a union of bare cycles" % a)
    rots = set(W.rotations(a))
    for word in in_cycle.values():
        if word not in rots:
            raise FinitenessCertificateFailed(
                "recurrent cycle %r is not a rotation of %r" % (word, a))
    return _enumerate_paths(auto, live, in_cycle)


def verify_empty_at_left_endpoint(a):
    """At beta = gamma_L and t = 1 - 1/beta the survivor set is empty.

    The hole's lower bound is then a_m...a_1 0^infinity, so candidates are
    exactly the (finite) Z-set; each member is certified to have a shift
    equal to (a)^infinity, which the strict upper bound excludes.
    """
    members = z_set(a)
    top = EpSequence("", a)
    for x in members:
        if not any(lex_compare_ep(s, top) == 0 for s in x.shifts()):
            return False
    return True


def t_n_family(a, n):
    """The approximant t_N = (0 a_2..a_m (a_1..a_m)^N a_1..a_j)^infinity,
    with j the Lyndon-rotation offset of a; checked symbolically to sit
    weakly below all of its shifts and strictly below (a)^infinity."""
    _require_farey_generator(a)
    if n < 1:
        raise ValueError("N must be >= 1")
    _, j = W.lyndon_rotation(a)
    per = "0" + a[1:] + a * n + a[:j]
    t = EpSequence("", per)
    top = EpSequence("", a)
    for s in t.shifts():
        assert lex_compare_ep(t, s) <= 0, "shift below t_N"
        assert lex_compare_ep(s, top) < 0, "shift reaches (a)^inf"
    return t


@lru_cache(maxsize=None)
def _farey_atlas(depth):
    return tuple(B.atlas(depth, kind="farey"))


def t_star_sequence(a):
    """0 a_2..a_m (a_1..a_m)^infinity."""
    return EpSequence("0" + a[1:], a)


def t_diamond_sequence(a):
    """0 a_2..a_m^+ 0^infinity."""
    return EpSequence("0" + W.plus(a)[1:], "0")


@dataclass
class TauReport:
    beta: object
    regime: str
    tau_lower: float
    tau_upper: float
    witnesses: dict = field(default_factory=dict)
    atlas_depth: int = 0
    certified: bool = True
    note: str = ""


def _locate(beta, recs):
    """Index of the Farey interval (gamma_L, gamma_R] containing beta,
    "left:i" if beta = gamma_L of record i, or None if outside all."""
    if beta.symbolic:
        for i, r in enumerate(recs):
            c = lex_compare_ep(beta.alpha, r.alpha_L)
            if c == 0:
                return "left:%d" % i
            if c > 0 and lex_compare_ep(beta.alpha, r.alpha_R) <= 0:
                return i
        return None
    b = beta.value
    for i, r in enumerate(recs):
        cl = iv_lt(r.beta_L.value, b)
        cr = iv_le(b, r.beta_R.value)
        if cl is None or (cl and cr is None):
            raise AtlasInconclusive(
                "beta indistinguishable from an endpoint of the %r interval"
                % r.generator)
        if cl and cr:
            return i
    return None


def tau_report(beta, atlas_depth=10):
    """Locate beta against the Farey-interval atlas and report the best
    known bracket for the critical hole size tau_beta."""
    if atlas_depth < 2:
        raise ValueError("atlas_depth must be >= 2")
    one_minus = iv.mpf(1) - iv.mpf(1) / beta.value
    if (beta.symbolic and beta.alpha.per == "1") or \
            (not beta.symbolic and beta.value.a == 2):
        return TauReport(beta, "outside_closure", 0.5, 0.5,
                         {"note": "doubling map"}, atlas_depth, True)
    recs = _farey_atlas(atlas_depth)
    loc = _locate(beta, recs)
    if isinstance(loc, str):
        i = int(loc.split(":")[1])
        a = recs[i].generator
        return TauReport(
            beta, "left_endpoint",
            float(mp.mpf(one_minus.a)), float(mp.mpf(one_minus.b)),
            {"generator": a, "hole_expansion": a[::-1] + "(0)"},
            atlas_depth, True)
    if loc is not None:
        rec = recs[loc]
        a = rec.generator
        ts = t_star_sequence(a)
        td = t_diamond_sequence(a)
        tsv = N.project(ts, beta.value)
        tdv = N.project(td, beta.value)
        wit = {"generator": a, "t_star": str(ts), "t_diamond": str(td)}
        # refinement: alpha(beta) below a+ (0 a_2..a_m) (a)^inf pins tau = t*
        bound = EpSequence(W.plus(a) + "0" + a[1:], a)
        low_regime = False
        if beta.symbolic:
            low_regime = lex_compare_ep(beta.alpha, bound) < 0
        else:
            digits, ok = beta.alpha_prefix(N.DEFAULT_HORIZON)
            if digits and digits < bound.prefix(len(digits)):
                low_regime = True
        if low_regime:
            return TauReport(beta, "inside_farey_low",
                             float(mp.mpf(tsv.a)), float(mp.mpf(tsv.b)),
                             wit, atlas_depth, True)
        return TauReport(beta, "inside_farey_high",
                         float(mp.mpf(tsv.a)), float(mp.mpf(tdv.b)),
                         wit, atlas_depth, True)
    # outside every atlas interval at this depth
    gap = _gap_width(beta, recs)
    if gap is not None and gap < 1e-6:
        return TauReport(beta, "outside_closure",
                         float(mp.mpf(one_minus.a)),
                         float(mp.mpf(one_minus.b)),
                         {"gap": gap}, atlas_depth, False,
                         "atlas-depth limited")
    return TauReport(beta, "outside_closure",
                     0.0, float(mp.mpf(one_minus.b)),
                     {"gap": gap}, atlas_depth, False,
                     "inconclusive: atlas gap exceeds tolerance")


def _gap_width(beta, recs):
    """Width of the atlas gap around a numeric beta (None if unbounded)."""
    if beta.symbolic:
        b = beta.value
    else:
        b = beta.value
    left = None
    right = None
    for r in recs:
        rv = r.beta_R.value
        lv = r.beta_L.value
        if iv_le(rv, b):
            x = float(mp.mpf(rv.b))
            left = x if left is None else max(left, x)
        if iv_le(b, lv):
            x = float(mp.mpf(lv.a))
            right = x if right is None else min(right, x)
    if left is None:
        left = 1.0
    if right is None:
        right = 2.0
    return right - left


def tau_json(report, digits=12):
    fmt = "%%.%df" % digits
    return {
        "beta": ("@%s" % report.beta.alpha if report.beta.symbolic
                 else mp.nstr(iv_mid(report.beta.value), 17)),
        "regime": report.regime,
        "tau_lower": fmt % report.tau_lower,
        "tau_upper": fmt % report.tau_upper,
        "witness_words": {k: str(v) for k, v in report.witnesses.items()},
        "atlas_depth": report.atlas_depth,
        "certified": report.certified,
        "note": report.note,
    }
