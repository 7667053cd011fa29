"""Exact coefficient fields.

Two modes are supported:

* ``root`` -- the cyclotomic field Q(q) with q a primitive 2h-th root of
  unity, realized as Q[x] modulo Phi_{2h}(x).  An element is a coefficient
  vector of length d = phi(2h) of exact rationals, stored as integer
  numerators over a single positive denominator.
* ``generic`` -- the field of rational functions in an indeterminate q,
  stored as a canonical quotient of two integer-coefficient polynomials
  (Laurent behaviour comes out of monomial denominators).

All arithmetic is exact; there is no floating point anywhere.  Scalars and
field specs are immutable values, safe for unrestricted concurrent use.

Working modulo Phi_{2h} rather than x^h + 1 matters: x^h + 1 has zero
divisors when 2h is not a prime power, which would make zero-testing
unsound, and zero-testing is the engine's core primitive.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

ROOT = "root"
GENERIC = "generic"


class FieldError(ArithmeticError):
    """Division by zero or inversion of zero."""


class UsageError(ValueError):
    """Invalid parameters or operands from different fields."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficients ascending)
# ---------------------------------------------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul_int(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _trim(out)


def _poly_exact_div_int(num, den):
    """Exact division of integer polynomials; the remainder must vanish."""
    num = list(num)
    dden = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dden)
    for k in range(len(num) - 1, dden - 1, -1):
        c = num[k]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        q = c // lead
        out[k - dden] = q
        if q:
            for j, dj in enumerate(den):
                num[k - dden + j] -= q * dj
    if any(num[:dden]):
        raise ArithmeticError("nonzero remainder in exact division")
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic(m):
    """Phi_m as an ascending integer coefficient tuple.

    Computed by exact division of x^m - 1 by Phi_e over the proper divisors
    e of m.
    """
    if m < 1:
        raise UsageError("cyclotomic index must be positive")
    poly = _trim([-1] + [0] * (m - 1) + [1])
    for e in range(1, m):
        if m % e == 0:
            poly = _poly_exact_div_int(poly, cyclotomic(e))
    return poly


def _content(c):
    g = 0
    for x in c:
        g = gcd(g, x)
    return g


def _primitive(c):
    g = _content(c)
    if g > 1:
        return tuple(x // g for x in c)
    return tuple(c)


def _prem(a, b):
    """Pseudo-remainder of integer polynomials a, b (deg a >= deg b)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        c = a[-1]
        a = [lb * x for x in a]
        for j, bj in enumerate(b):
            a[da - db + j] -= c * bj
        while a and a[-1] == 0:
            a.pop()
    return _trim(a)


def _pgcd(a, b):
    """Primitive gcd of nonzero integer polynomials."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    if a and a[-1] < 0:
        a = tuple(-x for x in a)
    return a


# ---------------------------------------------------------------------------
# field specification
# ---------------------------------------------------------------------------

class FieldSpec:
    """Immutable description of the coefficient field.

    Root mode carries h, the modulus Phi_{2h} and its degree d = phi(2h),
    plus reduction tables for x^d .. x^{2d-2} and the cached powers of q.
    """

    __slots__ = ("mode", "h", "degree", "modulus", "_red", "_qpow", "_qint",
                 "_qfact", "zero", "one", "minus_one")

    def __init__(self, mode, h=None):
        if mode not in (ROOT, GENERIC):
            raise UsageError(f"unknown field mode {mode!r}")
        self.mode = mode
        if mode == ROOT:
            if h is None or h < 3:
                raise UsageError("root-of-unity mode requires h >= 3")
            self.h = h
            self.modulus = cyclotomic(2 * h)
            d = len(self.modulus) - 1
            self.degree = d
            # reduction rows: x^{d+j} expressed in the basis 1..x^{d-1}
            rows = []
            cur = [-c for c in self.modulus[:d]]
            rows.append(tuple(cur))
            for _ in range(d - 2):
                ov = cur[d - 1]
                cur = [0] + cur[: d - 1]
                if ov:
                    first = rows[0]
                    cur = [c + ov * f for c, f in zip(cur, first)]
                rows.append(tuple(cur))
            self._red = tuple(rows)
        else:
            if h is not None:
                raise UsageError("generic mode takes no h")
            self.h = None
            self.degree = None
            self.modulus = None
            self._red = None
        self._qpow = {}
        self._qint = {}
        self._qfact = {}
        self.zero = self.from_int(0)
        self.one = self.from_int(1)
        self.minus_one = self.from_int(-1)

    def __repr__(self):
        if self.mode == ROOT:
            return f"FieldSpec(root, h={self.h})"
        return "FieldSpec(generic)"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.mode == other.mode and self.h == other.h

    def __hash__(self):
        return hash((self.mode, self.h))

    def tag(self):
        return f"root:{self.h}" if self.mode == ROOT else "generic"

    # -- constructors -------------------------------------------------------

    def from_int(self, v):
        if self.mode == ROOT:
            num = [0] * self.degree
            num[0] = v
            return RootScalar(self, tuple(num), 1)
        if v == 0:
            return GenericScalar(self, (), (1,))
        return GenericScalar(self, (v,), (1,))

    def from_fraction(self, fr):
        fr = Fraction(fr)
        if self.mode == ROOT:
            num = [0] * self.degree
            num[0] = fr.numerator
            return RootScalar(self, tuple(num), fr.denominator)
        return _make_generic(self, (fr.numerator,), (fr.denominator,))

    # -- q-specific values --------------------------------------------------

    def q_power(self, m):
        """q^m as a Scalar (negative m allowed)."""
        s = self._qpow.get(m)
        if s is not None:
            return s
        if self.mode == ROOT:
            e = m % (2 * self.h)
            s = self._qpow.get(e)
            if s is None:
                d = self.degree
                if e < d:
                    num = [0] * d
                    num[e] = 1
                    s = RootScalar(self, tuple(num), 1)
                else:
                    s = self.q_power(e - 1) * self.q_power(1)
                self._qpow[e] = s
        else:
            if m >= 0:
                s = GenericScalar(self, (0,) * m + (1,), (1,))
            else:
                s = GenericScalar(self, (1,), (0,) * (-m) + (1,))
        self._qpow[m] = s
        return s

    def q_int(self, m):
        """The q-integer [m] = (q^m - q^-m)/(q - q^-1), as a power sum.

        Implemented as sign(m) * sum_j q^{|m|-1-2j} so no division is needed.
        """
        s = self._qint.get(m)
        if s is not None:
            return s
        a = abs(m)
        s = self.zero
        for j in range(a):
            s = s + self.q_power(a - 1 - 2 * j)
        if m < 0:
            s = -s
        self._qint[m] = s
        return s

    def q_factorial(self, m):
        """[m]! = [1][2]...[m]."""
        if m < 0:
            raise UsageError("q_factorial needs m >= 0")
        s = self._qfact.get(m)
        if s is not None:
            return s
        s = self.one
        for j in range(1, m + 1):
            s = s * self.q_int(j)
        self._qfact[m] = s
        return s

    # -- text encoding ------------------------------------------------------

    def decode(self, obj):
        """Inverse of Scalar.encode()."""
        if self.mode == ROOT:
            if len(obj) != self.degree:
                raise UsageError("bad scalar encoding length")
            fracs = [Fraction(s) for s in obj]
            den = 1
            for f in fracs:
                den = den * f.denominator // gcd(den, f.denominator)
            num = tuple(int(f * den) for f in fracs)
            return _make_root(self, num, den)
        num, den = obj
        return _make_generic(self, tuple(int(x) for x in num), tuple(int(x) for x in den))


def make_field(mode, h=None):
    """Build a FieldSpec; ``mode`` is "root" (requires h >= 3) or "generic"."""
    return FieldSpec(mode, h)


# ---------------------------------------------------------------------------
# root-of-unity scalars
# ---------------------------------------------------------------------------

def _make_root(fs, num, den):
    if den < 0:
        den = -den
        num = tuple(-x for x in num)
    g = den
    for x in num:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        num = tuple(x // g for x in num)
        den //= g
    if not any(num):
        den = 1
    return RootScalar(fs, num, den)


class RootScalar:
    """Element of Q(q), q a primitive 2h-th root of unity.

    ``num`` is the ascending coefficient tuple of a polynomial in q of
    degree < d reduced mod Phi_{2h}; ``den`` a positive integer with
    gcd(num, den) = 1.  The representation is canonical, so equality is
    componentwise.
    """

    __slots__ = ("fs", "num", "den")

    def __init__(self, fs, num, den):
        self.fs = fs
        self.num = num
        self.den = den

    def is_zero(self):
        return not any(self.num)

    def __eq__(self, other):
        return (isinstance(other, RootScalar) and self.fs == other.fs
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.fs.h, self.num, self.den))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.num):
            if c:
                frac = Fraction(c, self.den)
                if i == 0:
                    terms.append(f"{frac}")
                elif i == 1:
                    terms.append(f"({frac})q")
                else:
                    terms.append(f"({frac})q^{i}")
        return " + ".join(terms) if terms else "0"

    def __neg__(self):
        return RootScalar(self.fs, tuple(-x for x in self.num), self.den)

    def __add__(self, other):
        if self.fs is not other.fs and self.fs != other.fs:
            raise UsageError("scalars from different fields")
        da, db = self.den, other.den
        if da == db:
            num = tuple(x + y for x, y in zip(self.num, other.num))
            return _make_root(self.fs, num, da)
        num = tuple(x * db + y * da for x, y in zip(self.num, other.num))
        return _make_root(self.fs, num, da * db)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        fs = self.fs
        if fs is not other.fs and fs != other.fs:
            raise UsageError("scalars from different fields")
        ca, cb = self.num, other.num
        d = fs.degree
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(ca):
            if ai:
                for j, bj in enumerate(cb):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:d]
        red = fs._red
        for j in range(d, 2 * d - 1):
            cj = conv[j]
            if cj:
                row = red[j - d]
                for t in range(d):
                    rt = row[t]
                    if rt:
                        out[t] += cj * rt
        return _make_root(fs, tuple(out), self.den * other.den)

    def invert(self):
        if self.is_zero():
            raise FieldError("inversion of zero")
        fs = self.fs
        nz = [i for i, c in enumerate(self.num) if c]
        if len(nz) == 1:
            # c/den * q^k inverts to den/c * q^{-k}
            k = nz[0]
            qinv = fs.q_power(-k)
            num = tuple(x * self.den for x in qinv.num)
            return _make_root(fs, num, qinv.den * self.num[k])
        # extended Euclid in Q[x] modulo Phi_{2h}
        a = [Fraction(c, self.den) for c in self.num]
        m = [Fraction(c) for c in fs.modulus]
        old_r, r = _ftrim(a), _ftrim(m)
        old_s, s = [Fraction(1)], []
        while r:
            q, rem = _fdivmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, _fsub(old_s, _fmul(q, s))
        if len(old_r) != 1:
            raise FieldError("non-invertible element (modulus not coprime)")
        c = old_r[0]
        inv = [x / c for x in old_s]
        inv += [Fraction(0)] * (fs.degree - len(inv))
        den = 1
        for f in inv:
            den = den * f.denominator // gcd(den, f.denominator)
        num = tuple(int(f * den) for f in inv)
        return _make_root(fs, num, den)

    def __truediv__(self, other):
        return self * other.invert()

    def encode(self):
        return [f"{Fraction(c, self.den)}" for c in self.num]


def _ftrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _fsub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _ftrim([x - y for x, y in zip(a, b)])


def _fmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ftrim(out)


def _fdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lb
        k = len(a) - len(b)
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
        a = _ftrim(a)
    return _ftrim(q), a


# ---------------------------------------------------------------------------
# generic-q scalars
# ---------------------------------------------------------------------------

def _make_generic(fs, num, den):
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise FieldError("zero denominator")
    if not num:
        return GenericScalar(fs, (), (1,))
    # strip common monomial factor q^t
    tz_n = next(i for i, c in enumerate(num) if c)
    tz_d = next(i for i, c in enumerate(den) if c)
    t = min(tz_n, tz_d)
    if t:
        num = num[t:]
        den = den[t:]
    cn, cd = _content(num), _content(den)
    pn = tuple(x // cn for x in num)
    pd = tuple(x // cd for x in den)
    g = _pgcd(pn, pd)
    if len(g) > 1:
        pn = _poly_exact_div_int(pn, g)
        pd = _poly_exact_div_int(pd, g)
    cg = gcd(cn, cd)
    cn //= cg
    cd //= cg
    num = tuple(x * cn for x in pn)
    den = tuple(x * cd for x in pd)
    if den[-1] < 0:
        num = tuple(-x for x in num)
        den = tuple(-x for x in den)
    return GenericScalar(fs, num, den)


class GenericScalar:
    """Rational function P(q)/Q(q) in canonical form.

    Canonical: no common polynomial or integer factor, no common monomial
    factor, positive leading denominator coefficient; zero is ()/(1,).
    """

    __slots__ = ("fs", "num", "den")

    def __init__(self, fs, num, den):
        self.fs = fs
        self.num = num
        self.den = den

    def is_zero(self):
        return not self.num

    def __eq__(self, other):
        return (isinstance(other, GenericScalar)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash(("generic", self.num, self.den))

    def __repr__(self):
        def poly(c):
            if not c:
                return "0"
            parts = []
            for i, x in enumerate(c):
                if x:
                    parts.append(f"{x}" if i == 0 else (f"{x}q" if i == 1 else f"{x}q^{i}"))
            return " + ".join(parts)
        if self.den == (1,):
            return poly(self.num)
        return f"({poly(self.num)})/({poly(self.den)})"

    def __neg__(self):
        return GenericScalar(self.fs, tuple(-x for x in self.num), self.den)

    def __add__(self, other):
        if self.fs != other.fs:
            raise UsageError("scalars from different fields")
        a = _poly_mul_int(self.num, other.den)
        b = _poly_mul_int(other.num, self.den)
        n = max(len(a), len(b))
        num = _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                     for i in range(n)])
        return _make_generic(self.fs, num, _poly_mul_int(self.den, other.den))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.fs != other.fs:
            raise UsageError("scalars from different fields")
        return _make_generic(self.fs, _poly_mul_int(self.num, other.num),
                             _poly_mul_int(self.den, other.den))

    def invert(self):
        if self.is_zero():
            raise FieldError("inversion of zero")
        return _make_generic(self.fs, self.den, self.num)

    def __truediv__(self, other):
        return self * other.invert()

    def encode(self):
        return [list(self.num), list(self.den)]
