"""Exact arithmetic over Q and over the rational function field Q(t).

The deformation parameter is q = t^N, so every coefficient q^(x) with
x in (1/N)Z becomes a Laurent monomial in t.  A Scalar is a reduced
fraction of integer polynomials in t; equality is equality of canonical
forms.  Scalars are immutable and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import PoleError, ScalarError

# integer polynomials are tuples of coefficients, index = degree, no
# trailing zeros; () is the zero polynomial


def _pstrip(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _pstrip(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _pstrip(out)


def _pcontent(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def _pprim(a):
    g = _pcontent(a)
    if g in (0, 1):
        return a
    return tuple(x // g for x in a)


def _prem(a, b):
    """Pseudo-remainder of a by b, integer-exact."""
    db, lb = len(b) - 1, b[-1]
    r = list(a)
    while len(_pstrip(r)) - 1 >= db and _pstrip(r):
        r = list(_pstrip(r))
        dr = len(r) - 1
        if dr < db:
            break
        lr = r[-1]
        shift = dr - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[shift + i] -= lr * y
        r = list(_pstrip(r))
        if not r:
            return ()
    return _pstrip(r)


def _pgcd(a, b):
    a, b = _pprim(_pstrip(a)), _pprim(_pstrip(b))
    while b:
        a, b = b, _pprim(_prem(a, b))
    if a and a[-1] < 0:
        a = _pneg(a)
    return a


def _pdiv_exact(a, b):
    """Divide a by b assuming exact divisibility over Q."""
    if not a:
        return ()
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = [Fraction(x) for x in a]
    lb = Fraction(b[-1])
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] / lb
        q[k] = c
        if c:
            for i, y in enumerate(b):
                r[k + i] -= c * y
    out = []
    for c in q:
        if c.denominator != 1:
            raise ScalarError("inexact polynomial division")
    return _pstrip(tuple(int(c) for c in q))


def _plow(a):
    """Index of the lowest nonzero coefficient."""
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _pshift(a, k):
    """Divide by t^k (assumes divisibility)."""
    return tuple(a[k:])


def _peval(a, t0):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t0 + c
    return acc


def _pstr(a):
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if not c:
            continue
        if d == 0:
            term = str(abs(c))
        else:
            tp = "t" if d == 1 else "t^%d" % d
            term = tp if abs(c) == 1 else "%d*%s" % (abs(c), tp)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append((" + " if c > 0 else " - ") + term)
    return "".join(parts)


class Scalar:
    """Element of Q(t) in canonical form.

    num and den are primitive-coprime integer polynomials and den has a
    positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,), _canonical=False):
        if _canonical:
            self.num = num
            self.den = den
            return
        num = _pstrip(tuple(num))
        den = _pstrip(tuple(den))
        if not den:
            raise ScalarError("zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        # cancel powers of t first (the common case: Laurent monomials)
        ln, ld = _plow(num), _plow(den)
        k = min(ln, ld)
        if k:
            num, den = _pshift(num, k), _pshift(den, k)
        den_monomial = len(den) == _plow(den) + 1
        if not den_monomial:
            gp = _pgcd(num, den)
            if len(gp) > 1 or gp[0] != 1:
                num = _pdiv_exact(num, gp)
                den = _pdiv_exact(den, gp)
        cn = gcd(_pcontent(num), _pcontent(den))
        if den[-1] < 0:
            cn = -cn
        if cn != 1:
            num = tuple(x // cn for x in num)
            den = tuple(x // cn for x in den)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_int(n):
        return Scalar((n,)) if n else Scalar(())

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return Scalar((fr.numerator,), (fr.denominator,))

    @staticmethod
    def t_power(k):
        """The Laurent monomial t^k."""
        if k >= 0:
            return Scalar((0,) * k + (1,))
        return Scalar((1,), (0,) * (-k) + (1,))

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return Scalar(_padd(self.num, other.num), self.den)
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if not self.num or not other.num:
            return _ZERO
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if not other.num:
            raise ScalarError("division by zero scalar")
        return Scalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inv(self):
        if not self.num:
            raise ScalarError("inverting zero")
        return Scalar(self.den, self.num)

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        acc = _ONE
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- predicates and conversions -----------------------------------
    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def eval_at(self, t0):
        """Exact value at t = t0; raises PoleError at a denominator zero."""
        t0 = Fraction(t0)
        d = _peval(self.den, t0)
        if d == 0:
            raise PoleError("pole at t = %s of 1/(%s)" % (t0, _pstr(self.den)))
        return _peval(self.num, t0) / d

    def __str__(self):
        if self.den == (1,):
            return _pstr(self.num)
        ns = _pstr(self.num)
        ds = _pstr(self.den)
        if len(self.num) > 1 or len([c for c in self.num if c]) > 1:
            ns = "(%s)" % ns
        if len(self.den) > 1 or len([c for c in self.den if c]) > 1:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    raise TypeError("cannot coerce %r to Scalar" % (x,))


_ZERO = Scalar(())
_ONE = Scalar((1,))


def qpow(p, dim):
    """q^p as a Scalar, where q = t^dim and p is a rational pairing value.

    dim*p must be an integer (weight pairings for sl_N lie in (1/N)Z).
    """
    e = Fraction(p) * dim
    if e.denominator != 1:
        raise ScalarError("pairing %s does not give an integer power of t" % p)
    return Scalar.t_power(int(e))


def eval_at(s, t0):
    """Exact rational value of a Scalar at t = t0."""
    return s.eval_at(t0)
