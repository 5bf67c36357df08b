"""Exact combinatorics on finite binary words.

Words are plain Python strings over the alphabet {0,1}.  The order used
everywhere is the one induced by padding with zeros: u comes before v
exactly when the infinite sequence u000... comes before v000...
"""

from functools import lru_cache

from .errors import (
    DegenerateFarey,
    LastDigitMismatch,
    LevelTooLarge,
    NotFarey,
    PeriodicWord,
)

MAX_FAREY_LEVEL = 20


def check_word(w):
    if not w or any(c not in "01" for c in w):
        raise ValueError("word must be a nonempty string over {0,1}: %r" % (w,))
    return w


def lex_compare(u, v):
    """Compare two words as if both were extended by infinitely many zeros.

    Returns -1, 0 or 1.
    """
    check_word(u)
    check_word(v)
    n = max(len(u), len(v))
    uu = u.ljust(n, "0")
    vv = v.ljust(n, "0")
    if uu < vv:
        return -1
    if uu > vv:
        return 1
    return 0


def plus(w):
    """Flip a trailing 0 to a 1."""
    check_word(w)
    if w[-1] != "0":
        raise LastDigitMismatch("plus() needs a word ending in 0: %r" % w)
    return w[:-1] + "1"


def minus(w):
    """Flip a trailing 1 to a 0."""
    check_word(w)
    if w[-1] != "1":
        raise LastDigitMismatch("minus() needs a word ending in 1: %r" % w)
    return w[:-1] + "0"


_FLIP = str.maketrans("01", "10")


def reflect(w):
    """Digitwise complement of the word."""
    check_word(w)
    return w.translate(_FLIP)


def is_aperiodic(w):
    """True unless w is a power of a strictly shorter word."""
    check_word(w)
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w == w[:d] * (n // d):
            return False
    return True


def is_lyndon(w):
    """True iff every proper suffix of w is strictly larger than the
    corresponding prefix (single letters count as Lyndon)."""
    check_word(w)
    m = len(w)
    for i in range(1, m):
        if lex_compare(w[i:], w[: m - i]) <= 0:
            return False
    return True


def rotations(w):
    return [w[i:] + w[:i] for i in range(len(w))]


def lyndon_rotation(w):
    """Smallest cyclic rotation of an aperiodic word, with its shift.

    Returns (rotated, j) such that rotated = w[j:] + w[:j].
    """
    check_word(w)
    if not is_aperiodic(w):
        raise PeriodicWord("word is a power of a shorter word: %r" % w)
    best, best_j = w, 0
    for j in range(1, len(w)):
        r = w[j:] + w[:j]
        if r < best:
            best, best_j = r, j
    return best, best_j


def max_rotation(w):
    """Largest cyclic rotation of an aperiodic word."""
    check_word(w)
    if not is_aperiodic(w):
        raise PeriodicWord("word is a power of a shorter word: %r" % w)
    return max(rotations(w))


@lru_cache(maxsize=None)
def farey_level(n, max_level=MAX_FAREY_LEVEL):
    """The n-th level of the Farey recursion as an ordered tuple.

    Level 0 is ("0", "1"); level n interleaves level n-1 with the
    concatenations of its neighbouring pairs, so it has 2**n + 1 entries.
    """
    if n < 0:
        raise ValueError("level must be nonnegative")
    if n > max_level:
        raise LevelTooLarge("level %d exceeds maximum %d" % (n, max_level))
    if n == 0:
        return ("0", "1")
    prev = farey_level(n - 1, max_level)
    out = []
    for i, w in enumerate(prev):
        out.append(w)
        if i + 1 < len(prev):
            out.append(w + prev[i + 1])
    return tuple(out)


@lru_cache(maxsize=None)
def _farey_words_up_to(max_len):
    """All non-degenerate Farey words of length <= max_len.

    Walks the neighbour-pair tree of the level recursion, cutting branches
    as soon as the concatenated word gets too long.  Returns a dict mapping
    each word to its (left, right) factor pair.
    """
    found = {}

    def descend(u, v):
        w = u + v
        if len(w) > max_len:
            return
        found[w] = (u, v)
        descend(u, w)
        descend(w, v)

    descend("0", "1")
    return found


def farey_words(max_len):
    """Sorted list of all non-degenerate Farey words of length <= max_len."""
    return sorted(_farey_words_up_to(max_len))


def is_farey(w):
    """True iff w occurs in some Farey level (the degenerate '0' and '1'
    included).  Words at level n are never shorter than n + 1, so looking
    at lengths up to |w| decides the question."""
    check_word(w)
    if w in ("0", "1"):
        return True
    return w in _farey_words_up_to(len(w))


def standard_factorization(w):
    """The unique split of a non-degenerate Farey word into the two Farey
    words whose concatenation produced it in the level recursion."""
    check_word(w)
    if w in ("0", "1"):
        raise DegenerateFarey("degenerate Farey word has no factorization: %r" % w)
    table = _farey_words_up_to(len(w))
    if w not in table:
        raise NotFarey("not a Farey word: %r" % w)
    return table[w]


def check_palindrome_property(w):
    """True iff the interior of the Farey word reads the same both ways."""
    check_word(w)
    if w in ("0", "1"):
        raise NotFarey("degenerate Farey word: %r" % w)
    if not is_farey(w):
        raise NotFarey("not a Farey word: %r" % w)
    inner = w[1:-1]
    return inner == inner[::-1]
