"""Chiral Fock-module words, states and relation instances.

A generator letter carries a row index i and a flavor index alpha, both in
1..n.  Words are byte strings of letter codes (i-1)*n + (alpha-1); the
leftmost byte is the leftmost operator factor, so the rightmost byte acts
first on the vacuum.  States are sparse word -> Scalar maps over one
chirality.

The barred generators satisfy relations of exactly the same shape in
(row, flavor) terms -- same exchange templates, same vacuum conditions,
same determinant contraction pattern, with the barred weights shifting the
same way -- so one set of templates serves both chiralities (a test pins
this down).

Relation templates, with all weight dependence evaluated on the suffix the
instance acts on:

  R1 (rows differ, flavors differ):
      a^j_b a^i_a [p_ij - 1] - a^i_a a^j_b [p_ij] + a^i_b a^j_a q^{eps_ab p_ij}
  R2 (rows differ, same flavor):   a^j_a a^i_a - a^i_a a^j_a
  R3 (same row, flavors differ):   a^i_a a^i_b - q^{eps_ab} a^i_b a^i_a
  R4 (root mode only):             (a^i_a)^h
  R5 (determinant, [n]!-cleared):  sum over row and flavor permutations of
      eps_rows * qeps_flavors * (n-letter block) minus [n]! D_q(p) times the
      bare word, where D_q(p) is the product of [p_ij] over i < j
  R6 (vacuum annihilation):        any word whose rightmost letter has row >= 2

R4 and R6 are single-word rows; membership is decided by the O(1)
predicate `word_is_dead`, which the reduction machinery uses directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .scalars import UsageError
from .weights import WeightVector, vacuum_weight

UNBARRED = "unbarred"
BARRED = "barred"

TEMPLATE_EXCHANGE = "exchange"          # R1
TEMPLATE_COMMUTE = "row_commute"        # R2
TEMPLATE_FLAVOR_SWAP = "flavor_swap"    # R3
TEMPLATE_POWER = "h_power"              # R4
TEMPLATE_DET = "determinant"            # R5
TEMPLATE_VACUUM = "vacuum"              # R6


@dataclass(frozen=True)
class Letter:
    chirality: str
    row: int
    flavor: int


def letter_code(n, row, flavor):
    if not (1 <= row <= n and 1 <= flavor <= n):
        raise UsageError(f"letter indices ({row},{flavor}) out of range 1..{n}")
    return (row - 1) * n + (flavor - 1)


def word_from_letters(n, letters):
    return bytes(letter_code(n, r, f) for r, f in letters)


def word_letters(n, w):
    return [(c // n + 1, c % n + 1) for c in w]


def word_row_content(n, w):
    c = [0] * n
    for code in w:
        c[code // n] += 1
    return tuple(c)


def word_flavor_content(n, w):
    c = [0] * n
    for code in w:
        c[code % n] += 1
    return tuple(c)


def word_weight(n, w):
    """Vacuum weight shifted once per letter by its row index."""
    p = list(vacuum_weight(n).p)
    for code in w:
        p[code // n] += 1
    return WeightVector(n, p)


def word_is_dead(n, h, w):
    """True when the word is directly annihilated on the vacuum.

    Covers the annihilation rows (rightmost letter with row >= 2) and, in
    root mode, the h-th power rows (h consecutive equal letters).
    """
    if not w:
        return False
    if w[-1] >= n:          # row index >= 2
        return True
    if h is not None and len(w) >= h:
        run = 1
        prev = w[0]
        for c in w[1:]:
            if c == prev:
                run += 1
                if run >= h:
                    return True
            else:
                run = 1
                prev = c
    return False


def word_sort_key(w):
    """Total order: longer words first, then right-to-left letter order."""
    return (-len(w), w[::-1])


# ---------------------------------------------------------------------------
# states
# ---------------------------------------------------------------------------

class ChiralState:
    """Sparse Scalar-weighted combination of words of one chirality."""

    __slots__ = ("field", "n", "chirality", "terms")

    def __init__(self, field, n, chirality=UNBARRED, terms=None):
        self.field = field
        self.n = n
        self.chirality = chirality
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def vacuum(cls, field, n, chirality=UNBARRED):
        return cls(field, n, chirality, {b"": field.one})

    def is_empty(self):
        return not self.terms

    def scale(self, c):
        if c.is_zero():
            return ChiralState(self.field, self.n, self.chirality)
        return ChiralState(self.field, self.n, self.chirality,
                           {w: c * x for w, x in self.terms.items()})

    def __add__(self, other):
        if self.chirality != other.chirality:
            raise UsageError("chirality mismatch")
        out = dict(self.terms)
        zero = self.field.zero
        for w, c in other.terms.items():
            out[w] = out.get(w, zero) + c
        return ChiralState(self.field, self.n, self.chirality, out)

    def __sub__(self, other):
        return self + other.scale_neg()

    def scale_neg(self):
        return ChiralState(self.field, self.n, self.chirality,
                           {w: -c for w, c in self.terms.items()})

    def apply_letter(self, row, flavor):
        """Left multiplication by one generator letter; no reduction."""
        code = bytes([letter_code(self.n, row, flavor)])
        return ChiralState(self.field, self.n, self.chirality,
                           {code + w: c for w, c in self.terms.items()})

    def __repr__(self):
        parts = []
        for w in sorted(self.terms, key=word_sort_key):
            letters = "".join(f"a[{r},{f}]" for r, f in word_letters(self.n, w)) or "|0>"
            parts.append(f"({self.terms[w]!r})*{letters}")
        return " + ".join(parts) if parts else "0"


def apply_letter(letter, state):
    """Module-level form; the letter's chirality must match the state's."""
    if letter.chirality != state.chirality:
        raise UsageError("chirality mismatch")
    return state.apply_letter(letter.row, letter.flavor)


# ---------------------------------------------------------------------------
# relation instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelationInstance:
    template: str
    terms: dict          # word bytes -> Scalar
    position: int        # leftmost index of the window / split point


def class_words(n, row_content, flavor_content):
    """All words with the given row and flavor multiset, deterministically."""
    row_seqs = sorted(set(permutations(
        [r + 1 for r in range(n) for _ in range(row_content[r])])))
    flav_seqs = sorted(set(permutations(
        [f + 1 for f in range(n) for _ in range(flavor_content[f])])))
    out = []
    for rs in row_seqs:
        for fs_ in flav_seqs:
            out.append(bytes((r - 1) * n + (f - 1) for r, f in zip(rs, fs_)))
    return out


def _eps(a, b):
    return 1 if a > b else (-1 if a < b else 0)


def exchange_rows(field, n, h, words, dedupe=False, mode=None):
    """Yield R1/R2/R3 instances for every window of every listed word.

    With dedupe=True the R2/R3 rows that are exact scalar multiples of a row
    generated from the sibling word are skipped (the span is unchanged).
    mode="short" yields only the two-term templates, mode="long" only the
    three-term one; elimination streams them in that order.
    """
    qint = field.q_int
    qpow = field.q_power
    one = field.one
    short = mode != "long"
    long_ = mode != "short"
    for w in words:
        N = len(w)
        cnt = [0] * n
        # windows processed right to left so suffix row counts accumulate
        for p in range(N - 2, -1, -1):
            x = w[p]
            y = w[p + 1]
            xi, xa = x // n, x % n          # 0-based rows/flavors
            yi, ya = y // n, y % n
            if xi != yi:
                if xa != ya and long_:
                    # i = right letter's row, j = left letter's row (1-based)
                    pij = (xi - yi) + (cnt[yi] - cnt[xi])
                    w2 = w[:p] + bytes((y, x)) + w[p + 2:]
                    w3 = w[:p] + bytes((yi * n + xa, xi * n + ya)) + w[p + 2:]
                    # the three words are pairwise distinct here
                    terms = {w: qint(pij - 1),
                             w2: -qint(pij),
                             w3: qpow(_eps(ya, xa) * pij)}
                    yield RelationInstance(TEMPLATE_EXCHANGE, terms, p)
                elif xa == ya and short and (not dedupe or xi > yi):
                    w2 = w[:p] + bytes((y, x)) + w[p + 2:]
                    yield RelationInstance(TEMPLATE_COMMUTE, {w: one, w2: -one}, p)
            elif xa != ya and short and (not dedupe or xa > ya):
                w2 = w[:p] + bytes((y, x)) + w[p + 2:]
                yield RelationInstance(
                    TEMPLATE_FLAVOR_SWAP, {w: one, w2: -qpow(_eps(xa, ya))}, p)
            cnt[yi] += 1


def single_word_rows(field, n, h, words):
    """Yield the R4/R6 one-term instances among the listed words."""
    one = field.one
    for w in words:
        if not w:
            continue
        if w[-1] >= n:
            yield RelationInstance(TEMPLATE_VACUUM, {w: one}, len(w) - 1)
        elif word_is_dead(n, h, w):
            yield RelationInstance(TEMPLATE_POWER, {w: one}, 0)


def _perm_data(n):
    perms = list(permutations(range(1, n + 1)))
    data = []
    for s in perms:
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])
        data.append((s, inv))
    return data


def determinant_rows(field, n, h, eps_sign, lower_words, prune=False):
    """Yield R5 instances: one per (lower word, split point).

    Each row expands the n-letter determinant block inserted at the split,
    with the ordinary antisymmetric symbol on rows and the quantum one,
    (-q)^{eps_sign * inversions}, on flavors, minus [n]! D_q evaluated at
    the suffix weight times the bare word.

    With prune=True, splits whose every resulting word is annihilated
    outright are skipped (rows supported on dead words only).
    """
    qint = field.q_int
    qpow = field.q_power
    zero = field.zero
    pdata = _perm_data(n)
    nfact = field.q_factorial(n)
    # quantum flavor symbol values
    qeps = {}
    for s, inv in pdata:
        e = eps_sign * inv
        v = qpow(e)
        qeps[s] = v if e % 2 == 0 else -v
    sgn = {s: (1 if inv % 2 == 0 else -1) for s, inv in pdata}
    for z in lower_words:
        L = len(z)
        # a word ending in a row >= 2 letter keeps that ending under every
        # split except the last, so those rows are supported on dead words
        if prune and z and z[-1] >= n:
            splits = (L,)
        else:
            splits = range(L + 1)
        for split in splits:
            suffix = z[split:]
            cnt = [0] * n
            for code in suffix:
                cnt[code // n] += 1
            # D_q = prod_{i<j} [p_ij] at the suffix weight  (p_r = -r + cnt_r)
            dq = field.one
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    dq = dq * qint((j - i) + cnt[i - 1] - cnt[j - 1])
                    if dq.is_zero():
                        break
                if dq.is_zero():
                    break
            terms = {}
            prefix = z[:split]
            for srow, _ in pdata:
                for sflav, _ in pdata:
                    block = bytes((srow[t] - 1) * n + (sflav[t] - 1) for t in range(n))
                    wrd = prefix + block + suffix
                    c = qeps[sflav] if sgn[srow] == 1 else -qeps[sflav]
                    terms[wrd] = terms.get(wrd, zero) + c
            bare = -(nfact * dq)
            terms[z] = terms.get(z, zero) + bare
            yield RelationInstance(TEMPLATE_DET, terms, split)
