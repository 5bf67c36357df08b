"""Eventually periodic binary sequences and symbolic order relations.

An EpSequence stores the infinite sequence preperiod . period^infinity in
a canonical form (primitive period, shortest possible preperiod), so that
structural equality coincides with equality of the infinite sequences.
"""

from dataclasses import dataclass
from math import gcd

from . import words as W


def _primitive(per):
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per == per[:d] * (n // d):
            return per[:d]
    return per


@dataclass(frozen=True, order=False)
class EpSequence:
    pre: str
    per: str

    def __post_init__(self):
        if self.pre:
            W.check_word(self.pre)
        W.check_word(self.per)
        per = _primitive(self.per)
        pre = self.pre
        # absorb a preperiod tail that merely repeats the period
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def digit(self, i):
        """Digit at 0-based position i."""
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n):
        k = len(self.pre)
        if n <= k:
            return self.pre[:n]
        reps = (n - k) // len(self.per) + 1
        return (self.pre + self.per * reps)[:n]

    def shift(self, n=1):
        """sigma^n of the sequence."""
        k = len(self.pre)
        if n <= k:
            return EpSequence(self.pre[n:], self.per)
        r = (n - k) % len(self.per)
        return EpSequence("", self.per[r:] + self.per[:r])

    def shifts(self):
        """All distinct shifted sequences sigma^n, n >= 0 (finitely many)."""
        seen = []
        for n in range(len(self.pre) + len(self.per)):
            s = self.shift(n)
            if s not in seen:
                seen.append(s)
        return seen

    def is_zero_tail(self):
        return self.per == "0"

    @property
    def window(self):
        """Number of leading digits that determine the whole sequence."""
        return len(self.pre) + len(self.per)

    @classmethod
    def parse(cls, text):
        """Parse the "PRE(PER)" text form, e.g. "11(01)" or "(10)"."""
        text = text.strip()
        if "(" not in text or not text.endswith(")"):
            raise ValueError("expected PRE(PER) with PER nonempty: %r" % text)
        pre, per = text[:-1].split("(", 1)
        return cls(pre, per)

    def __str__(self):
        return "%s(%s)" % (self.pre, self.per)


def lex_compare_ep(u, v):
    """Exact comparison of two eventually periodic sequences (-1, 0, 1).

    Beyond the combined preperiods plus one common period both sequences
    run in lockstep, so a finite window decides.
    """
    if u == v:
        return 0
    l = len(u.per) * len(v.per) // gcd(len(u.per), len(v.per))
    n = len(u.pre) + len(v.pre) + 2 * l
    a = u.prefix(n)
    b = v.prefix(n)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def compare_word_prefix(w, s):
    """Compare the word w against the first len(w) digits of sequence s.

    Returns -1/0/1; 0 means the window is inconclusive (digits equal)."""
    p = s.prefix(len(w))
    if w < p:
        return -1
    if w > p:
        return 1
    return 0


def is_in_Q(a):
    """True iff a is the quasi-greedy expansion of 1 for some base in (1,2]:
    it does not end in zeros and dominates all of its shifts."""
    if a.is_zero_tail():
        return False
    return all(lex_compare_ep(s, a) <= 0 for s in a.shifts())


def is_admissible(x, alpha):
    """Parry's criterion: every shift of x lies strictly below alpha."""
    return all(lex_compare_ep(s, alpha) < 0 for s in x.shifts())


ZERO = EpSequence("", "0")
ONES = EpSequence("", "1")
