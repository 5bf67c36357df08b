"""Survivor-set subshifts: compilation, word counting, entropy, dimension.

A LexSubshift is the set of one-sided 0/1 sequences x with

    lower <= sigma^n(x) < upper      for all n >= 0

(with the strictness of each bound configurable).  It compiles to a DFA
whose states track, for each bound, every position at which the word read
so far is still sitting exactly on a prefix of that bound; leaving the
prefix on the wrong side kills the path.
"""

from dataclasses import dataclass, field
from itertools import product
from math import log2

import numpy as np

from .errors import StateCapExceeded, TooLarge
from .sequences import EpSequence, lex_compare_ep
from . import numeric as N
from .numeric import BetaSpec, iv, mp


@dataclass(frozen=True)
class LexSubshift:
    lower: EpSequence
    upper: EpSequence
    strict_lower: bool = False
    strict_upper: bool = True


def reduce_upper(shift):
    """Replace a strict upper bound alpha by an equivalent non-strict one.

    If alpha_m = 1 and sigma^m(alpha) <= lower for some m, no legal
    sequence can follow alpha past position m, so the strict bound alpha
    equals the non-strict bound (alpha_1...alpha_m^-)^infinity.  Returns
    the input unchanged when no such m exists.
    """
    if not shift.strict_upper:
        return shift
    a = shift.upper
    for m in range(1, a.window + 1):
        if a.digit(m - 1) == "1" and \
                lex_compare_ep(a.shift(m), shift.lower) <= 0:
            w = a.prefix(m)
            new_upper = EpSequence("", w[:-1] + "0")
            return LexSubshift(shift.lower, new_upper,
                               shift.strict_lower, False)
    return shift


class SubshiftAutomaton:
    """DFA over {0,1} whose length-n path count equals the number of
    words passing every suffix-window check against the two bounds."""

    def __init__(self, shift, cap=10 ** 6):
        self.shift = shift
        L, U = shift.lower, shift.upper

        def adv(pos, seq):
            pos += 1
            return len(seq.pre) if pos == seq.window else pos

        def step(state, d):
            lo, up = state
            new_lo = set()
            for i in set(lo) | {0}:
                b = L.digit(i)
                if d < b:
                    return None
                if d == b:
                    new_lo.add(adv(i, L))
            new_up = set()
            for i in set(up) | {0}:
                b = U.digit(i)
                if d > b:
                    return None
                if d == b:
                    new_up.add(adv(i, U))
            return frozenset(new_lo), frozenset(new_up)

        start = (frozenset(), frozenset())
        index = {start: 0}
        order = [start]
        trans = []
        qi = 0
        while qi < len(order):
            st = order[qi]
            qi += 1
            row = [None, None]
            for d in "01":
                nxt = step(st, d)
                if nxt is not None:
                    if nxt not in index:
                        if len(index) >= cap:
                            raise StateCapExceeded(
                                "automaton exceeded %d states" % cap)
                        index[nxt] = len(index)
                        order.append(nxt)
                    row[int(d)] = index[nxt]
            trans.append(tuple(row))
        self.transitions = trans
        self.start = 0

    def __len__(self):
        return len(self.transitions)

    def count_paths(self, n):
        v = np.zeros(len(self.transitions), dtype=object)
        v[self.start] = 1
        for _ in range(n):
            w = np.zeros_like(v)
            for s, row in enumerate(self.transitions):
                if v[s]:
                    for nxt in row:
                        if nxt is not None:
                            w[nxt] += v[s]
            v = w
        return int(v.sum())

    def live_states(self):
        """States with arbitrarily long outgoing paths (can reach a cycle)."""
        n = len(self.transitions)
        alive = set(range(n))
        changed = True
        while changed:
            changed = False
            for s in list(alive):
                if not any(t in alive for t in self.transitions[s]
                           if t is not None):
                    alive.remove(s)
                    changed = True
        return alive

    def sccs(self, restrict=None):
        """Tarjan's strongly connected components, iteratively."""
        nodes = restrict if restrict is not None else set(
            range(len(self.transitions)))
        index = {}
        low = {}
        on_stack = set()
        stack = []
        out = []
        counter = [0]
        for root in nodes:
            if root in index:
                continue
            work = [(root, iter([t for t in self.transitions[root]
                                 if t is not None and t in nodes]))]
            index[root] = low[root] = counter[0]
            counter[0] += 1
            stack.append(root)
            on_stack.add(root)
            while work:
                v, it = work[-1]
                advanced = False
                for w in it:
                    if w not in index:
                        index[w] = low[w] = counter[0]
                        counter[0] += 1
                        stack.append(w)
                        on_stack.add(w)
                        work.append(
                            (w, iter([t for t in self.transitions[w]
                                      if t is not None and t in nodes])))
                        advanced = True
                        break
                    elif w in on_stack:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.remove(w)
                        comp.append(w)
                        if w == v:
                            break
                    out.append(comp)
        return out


def compile(shift, cap=10 ** 6):
    return SubshiftAutomaton(shift, cap)


def count_words_brute(shift, n):
    """Direct sweep over all 2^n words with suffix-window prefix checks."""
    if n > 30:
        raise TooLarge("brute-force counting capped at n=30")
    L, U = shift.lower, shift.upper
    lo_pref = [L.prefix(m) for m in range(n + 1)]
    up_pref = [U.prefix(m) for m in range(n + 1)]
    count = 0
    for bits in product("01", repeat=n):
        w = "".join(bits)
        ok = True
        for k in range(n):
            suf = w[k:]
            m = n - k
            if suf < lo_pref[m] or suf > up_pref[m]:
                ok = False
                break
        if ok:
            count += 1
    return count


def count_words(shift, n, method="auto"):
    """Number of length-n words occurring in the subshift (window semantics)."""
    if method == "brute":
        return count_words_brute(shift, n)
    try:
        return compile(shift).count_paths(n)
    except StateCapExceeded:
        if method == "automaton":
            raise
        return count_words_brute(shift, n)


@dataclass
class EntropyBracket:
    lower_bound: float
    upper_bound: float
    method: str
    empty: bool = False


def _scc_spectral_radius(auto, comp, tol=1e-9, max_iter=20000):
    """Certified bracket for the largest eigenvalue of the adjacency matrix
    restricted to one strongly connected component.

    Power iteration on A+I with Collatz-Wielandt min/max ratio bounds;
    A+I is primitive on a strongly connected graph, so both bounds
    converge to the eigenvalue.
    """
    idx = {s: i for i, s in enumerate(comp)}
    k = len(comp)
    B = np.zeros((k, k))
    has_edge = False
    for s in comp:
        for t in auto.transitions[s]:
            if t is not None and t in idx:
                B[idx[s], idx[t]] += 1.0
                has_edge = True
    if not has_edge:
        return 0.0, 0.0
    if (B.sum(axis=1) == 1).all() and (B.sum(axis=0) == 1).all():
        # bare cycle: spectral radius exactly 1
        return 1.0, 1.0
    B = B + np.eye(k)
    x = np.ones(k)
    best_lo, best_hi = 0.0, float("inf")
    done = 0
    while done < max_iter:
        for _ in range(50):
            y = B @ x
            ratios = y / x
            best_lo = max(best_lo, ratios.min())
            best_hi = min(best_hi, ratios.max())
            x = y / y.max()
            done += 1
        if best_hi - best_lo < tol:
            break
    lam_lo = max(best_lo - 1.0 - 1e-12, 0.0)
    lam_hi = best_hi - 1.0 + 1e-12
    return lam_lo, lam_hi


def entropy(shift, cap=10 ** 6, n_max=14):
    """Topological entropy bracket in bits.

    method=automaton_exact: log2 of the certified spectral-radius bracket
    of the recurrent part of the compiled automaton.  Falls back to
    counting (upper bound from the subadditive inf formula, trivial lower
    bound) if compilation blows the state cap.
    """
    try:
        auto = compile(shift, cap)
    except StateCapExceeded:
        best = 1.0
        for n in range(4, n_max + 1, 2):
            c = count_words_brute(shift, n)
            if c == 0:
                return EntropyBracket(0.0, 0.0, "counting", empty=True)
            best = min(best, log2(c) / n)
        return EntropyBracket(0.0, best, "counting")
    alive = auto.live_states()
    if auto.start not in alive:
        return EntropyBracket(0.0, 0.0, "automaton_exact", empty=True)
    lam_lo, lam_hi = 0.0, 0.0
    for comp in auto.sccs(alive):
        if len(comp) == 1:
            s = comp[0]
            loops = sum(1 for t in auto.transitions[s] if t == s)
            lo = hi = float(loops)
        else:
            lo, hi = _scc_spectral_radius(auto, comp)
        lam_lo = max(lam_lo, lo)
        lam_hi = max(lam_hi, hi)
    if lam_hi < 1.0:
        # recurrent part exists, so some cycle does; guard rounding
        lam_hi = 1.0
    h_lo = log2(lam_lo) if lam_lo > 1.0 else 0.0
    h_hi = log2(lam_hi) if lam_hi > 1.0 else 0.0
    return EntropyBracket(max(h_lo, 0.0), max(h_hi, h_lo, 0.0),
                          "automaton_exact")


def membership(x, shift):
    """Exact symbolic test that every shift of x satisfies both bounds."""
    for s in x.shifts():
        c = lex_compare_ep(s, shift.lower)
        if c < 0 or (shift.strict_lower and c == 0):
            return False
        c = lex_compare_ep(s, shift.upper)
        if c > 0 or (shift.strict_upper and c == 0):
            return False
    return True


class PointSpec:
    """A hole endpoint t in [0,1), numeric or given by its greedy expansion."""

    def __init__(self, value=None, seq=None):
        if seq is not None:
            self.seq = seq
            self.value = None
        else:
            self.value = N.to_iv(value)
            self.seq = None

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("@"):
            return cls(seq=EpSequence.parse(text[1:]))
        return cls(value=text)

    def expansion(self, beta, horizon=N.DEFAULT_HORIZON):
        """(exact EpSequence or None, certified digit prefix)."""
        if self.seq is not None:
            return self.seq, self.seq.prefix(horizon)
        return greedy_sequence(self.value, beta.value, horizon)


def greedy_sequence(x, beta, horizon=N.DEFAULT_HORIZON):
    """Greedy expansion with exact-orbit period detection.

    Returns (seq, prefix): seq is an EpSequence when the interval orbit
    collapses to an exactly recurring point (e.g. hits 0), else None;
    prefix is the certified digit prefix either way.
    """
    one = iv.mpf(1)
    y = x
    out = []
    seen = {}
    for i in range(horizon):
        if y.a == y.b:
            key = mp.mpf(y.a)
            if key in seen:
                j = seen[key]
                return EpSequence("".join(out[:j]), "".join(out[j:])), \
                    "".join(out)
            seen[key] = i
        c = y * beta
        if c.b < 1:
            out.append("0")
            y = c
        elif c.a >= 1:
            out.append("1")
            y = c - one
        else:
            break
    return None, "".join(out)


def alpha_bounds(beta, horizon=N.DEFAULT_HORIZON):
    """(exact alpha EpSequence or None, certified prefix) for a BetaSpec."""
    if beta.symbolic:
        return beta.alpha, beta.alpha.prefix(horizon)
    digits, _, seq = N.alpha_of_beta(beta.value, horizon)
    return seq, digits


@dataclass
class DimensionReport:
    h_lower: float
    h_upper: float
    dim_lower: float
    dim_upper: float
    method: str
    empty: bool = False


def dimension(beta, t, horizon=N.DEFAULT_HORIZON, cap=10 ** 6):
    """Entropy and Hausdorff-dimension brackets for the survivor set
    with hole (0, t), via Bowen's formula dim = h / log2(beta).

    When either bound is known only to a digit horizon, the subshift is
    bracketed between an outer automaton (bounds relaxed both ways) and
    an inner one (bounds tightened), and the report widens accordingly.
    """
    if not isinstance(t, PointSpec):
        t = PointSpec(value=t)
    a_seq, a_pref = alpha_bounds(beta, horizon)
    t_seq, t_pref = t.expansion(beta, horizon)
    exact = a_seq is not None and t_seq is not None
    if exact:
        shift = LexSubshift(t_seq, a_seq)
        br = entropy(shift, cap)
        h_lo, h_hi = br.lower_bound, br.upper_bound
        method = br.method
        empty = br.empty
    else:
        lo_out = EpSequence(t_pref, "0") if t_seq is None else t_seq
        lo_in = EpSequence(t_pref, "1") if t_seq is None else t_seq
        up_out = EpSequence(a_pref, "1") if a_seq is None else a_seq
        up_in = EpSequence(a_pref, "0") if a_seq is None else a_seq
        outer = entropy(LexSubshift(lo_out, up_out), cap)
        inner = entropy(LexSubshift(lo_in, up_in), cap)
        h_lo, h_hi = inner.lower_bound, outer.upper_bound
        method = "automaton_outer_inner"
        empty = outer.empty
    lb = iv.log(beta.value) / iv.log(iv.mpf(2))
    dim_lo = min(max(h_lo / float(mp.mpf(lb.b)), 0.0), 1.0)
    dim_hi = min(max(h_hi / float(mp.mpf(lb.a)), 0.0), 1.0)
    if dim_hi < dim_lo:
        dim_lo, dim_hi = dim_hi, dim_lo
    return DimensionReport(h_lo, h_hi, dim_lo, dim_hi, method, empty)
