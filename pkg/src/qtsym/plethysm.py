"""Adams operators, plethystic substitution, and plethystic Exp/Log.

Alphabet expressions are formal sums of atoms: a (possibly scaled)
alphabet symbol, or a pure scalar summand whose indeterminates the Adams
operator raises to powers. This covers every substitution the engine
needs: X+Y, X(q-1), X/((q-1)(1-t)), 1-u, 1+u, X + (1-q)(1-t)*zi, and
products of alphabets via scaled atoms.

Degree-truncated series carry the grading variable implicitly: component
d of a Series is the coefficient of s^d.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeffring import HookField, Polynomial, RationalFunction, rf
from .partitions import Partition
from .symfunc import SymFunc, _cf, _is_zero_coeff


class AlphabetExpr:
    """Formal sum of atoms (coef, slot); slot None means a scalar summand."""

    __slots__ = ("atoms",)

    def __init__(self, atoms=()):
        self.atoms = tuple((rf(c), j) for c, j in atoms)

    @staticmethod
    def alphabet(j, coef=1):
        return AlphabetExpr(((coef, j),))

    @staticmethod
    def scalar(c):
        return AlphabetExpr(((c, None),))

    def __add__(self, other):
        return AlphabetExpr(self.atoms + other.atoms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = rf(c)
        return AlphabetExpr(tuple((coef * c, j) for coef, j in self.atoms))

    def __repr__(self):
        bits = []
        for c, j in self.atoms:
            bits.append("(%s)%s" % (c, "*X%d" % (j + 1) if j is not None else ""))
        return " + ".join(bits) or "0"


def _raise_coeff(c, n):
    if isinstance(c, HookField):
        return c.raise_exponents(n)
    return _cf(c).raise_exponents(n)


def adams(n, obj):
    """The n-th Adams operator: power-sum indices multiply, coefficient
    indeterminates go to n-th powers, series degrees scale by n."""
    if n < 1:
        raise ValueError("Adams index must be positive")
    if isinstance(obj, Series):
        out = Series(obj.cap, obj.k)
        for d, comp in enumerate(obj.comps):
            if n * d > obj.cap:
                break
            if not comp.is_zero():
                out.comps[n * d] = out.comps[n * d] + adams(n, comp)
        return out
    F = obj
    if n == 1:
        return F
    terms = {}
    for key, c in F.terms.items():
        new_key = tuple(Partition(tuple(part * n for part in p)) for p in key)
        terms[new_key] = _raise_coeff(c, n)
    res = SymFunc.__new__(SymFunc)
    res.k = F.k
    res.terms = terms
    return res


def _pn_of_expr(n, expr, k):
    """p_n evaluated on an alphabet expression, as a SymFunc with k alphabets."""
    empty_key = (Partition(),) * k
    out = SymFunc.zero(k)
    terms = {}
    for coef, j in expr.atoms:
        c = coef.raise_exponents(n)
        if j is None:
            key = empty_key
        else:
            key = list(empty_key)
            key[j] = Partition((n,))
            key = tuple(key)
        if key in terms:
            s = terms[key] + c
            if _is_zero_coeff(s):
                del terms[key]
            else:
                terms[key] = s
        elif not _is_zero_coeff(c):
            terms[key] = c
    out.terms = terms
    return out


def substitute(F, alphabet, expr):
    """Plethystic substitution of an alphabet expression into one alphabet.

    Replaces p_n[X_j] by p_n[expr] for the slot j and expands; other
    alphabets ride along untouched.
    """
    j = alphabet
    out = SymFunc.zero(F.k)
    pn_cache = {}
    for key, c in F.terms.items():
        lam = key[j]
        rest_key = tuple(Partition() if i == j else p for i, p in enumerate(key))
        acc = SymFunc(F.k, {rest_key: c})
        for part in lam:
            if part not in pn_cache:
                pn_cache[part] = _pn_of_expr(part, expr, F.k)
            acc = acc * pn_cache[part]
        out = out + acc
    return out


# -- coefficient-variable helpers ---------------------------------------------


def _poly_var_coefficient(poly, name, power):
    """Coefficient of name**power in a Polynomial, as a Polynomial without it."""
    if name not in poly.vars:
        return poly if power == 0 else Polynomial.const(0)
    i = poly.vars.index(name)
    rest = poly.vars[:i] + poly.vars[i + 1 :]
    picked = {}
    for e, c in poly.terms.items():
        if e[i] == power:
            picked[e[:i] + e[i + 1 :]] = c
    return Polynomial(rest, picked)


def coefficient_of(F, name, power):
    """Extract the coefficient of name**power from every coefficient of F.

    Denominators must be free of the indeterminate; raises ValueError
    otherwise (a pole in the extraction variable signals a mismatch
    upstream).
    """

    def pick(c):
        if isinstance(c, HookField):
            return HookField(pick(c.base), pick(c.odd))
        if c.den.degree_in(name):
            raise ValueError("denominator involves %s: %s" % (name, c))
        return RationalFunction(_poly_var_coefficient(c.num, name, power), c.den)

    return F.map_coefficients(pick)


def eval_var(F, name, value):
    """Substitute one coefficient indeterminate by a value in every term."""

    def ev(c):
        if isinstance(c, HookField):
            raise TypeError("use HookField.specialize for hook coefficients")
        return c.specialize({name: rf(value)})

    return F.map_coefficients(ev)


def z_diagonal(F, zname="z", ziname="zi"):
    """Keep coefficient terms with equal z and zi exponents, then drop both.

    This is the coefficient of z^0 when zi stands for 1/z; denominators
    must be free of both markers.
    """

    def pick(c):
        if isinstance(c, HookField):
            return HookField(pick(c.base), pick(c.odd))
        if c.den.degree_in(zname) or c.den.degree_in(ziname):
            raise ValueError("denominator involves the z markers: %s" % c)
        poly = c.num
        iz = poly.vars.index(zname) if zname in poly.vars else None
        izi = poly.vars.index(ziname) if ziname in poly.vars else None
        keep = {}
        for e, coeff in poly.terms.items():
            ez = e[iz] if iz is not None else 0
            ezi = e[izi] if izi is not None else 0
            if ez != ezi:
                continue
            reduced = tuple(x for idx, x in enumerate(e) if idx not in (iz, izi))
            keep[reduced] = keep.get(reduced, Fraction(0)) + coeff
        rest = tuple(v for idx, v in enumerate(poly.vars) if idx not in (iz, izi))
        return RationalFunction(Polynomial(rest, keep), c.den)

    return F.map_coefficients(pick)


# -- truncated series -----------------------------------------------------------


class Series:
    """Degree-truncated series of multivariate symmetric functions."""

    __slots__ = ("cap", "k", "comps")

    def __init__(self, cap, k=1, comps=None):
        self.cap = cap
        self.k = k
        self.comps = [SymFunc.zero(k) for _ in range(cap + 1)]
        if comps:
            for d, F in comps.items() if isinstance(comps, dict) else enumerate(comps):
                if d <= cap and not F.is_zero():
                    self.comps[d] = F

    @staticmethod
    def one(cap, k=1):
        s = Series(cap, k)
        s.comps[0] = SymFunc.one(k)
        return s

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def component(self, d):
        return self.comps[d] if 0 <= d <= self.cap else SymFunc.zero(self.k)

    def __add__(self, other):
        if isinstance(other, Series):
            if other.k != self.k:
                raise ValueError("alphabet count mismatch")
            cap = min(self.cap, other.cap)
            out = Series(cap, self.k)
            for d in range(cap + 1):
                out.comps[d] = self.comps[d] + other.comps[d]
            return out
        out = Series(self.cap, self.k, list(self.comps))
        out.comps[0] = out.comps[0] + SymFunc.one(self.k) * _cf(other)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Series(self.cap, self.k)
        out.comps = [-c for c in self.comps]
        return out

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series) else -_as_series_const(other, self))

    def __mul__(self, other):
        if isinstance(other, Series):
            if other.k != self.k:
                raise ValueError("alphabet count mismatch")
            cap = min(self.cap, other.cap)
            out = Series(cap, self.k)
            for da, ca in enumerate(self.comps[: cap + 1]):
                if ca.is_zero():
                    continue
                for db in range(cap + 1 - da):
                    cb = other.comps[db]
                    if cb.is_zero():
                        continue
                    out.comps[da + db] = out.comps[da + db] + ca * cb
            return out
        out = Series(self.cap, self.k)
        out.comps = [c * other for c in self.comps]
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.cap == other.cap
            and self.k == other.k
            and all(a == b for a, b in zip(self.comps, other.comps))
        )

    def __repr__(self):
        bits = ["s^%d: %s" % (d, c) for d, c in enumerate(self.comps) if not c.is_zero()]
        return "Series(cap=%d; %s)" % (self.cap, "; ".join(bits) or "0")


def _as_series_const(value, like):
    s = Series(like.cap, like.k)
    s.comps[0] = SymFunc.one(like.k) * _cf(value)
    return s


@lru_cache(maxsize=None)
def mobius(n):
    if n == 1:
        return 1
    out = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def exp_series(G):
    """Plethystic exponential of a series with zero constant term."""
    if not G.comps[0].is_zero():
        raise ValueError("Exp needs a zero constant term")
    cap, k = G.cap, G.k
    arg = Series(cap, k)
    for n in range(1, cap + 1):
        scaled = adams(n, G) * Fraction(1, n)
        arg = arg + scaled
    out = Series.one(cap, k)
    term = Series.one(cap, k)
    for m in range(1, cap + 1):
        term = term * arg * Fraction(1, m)
        out = out + term
    return out


def log_series(H):
    """Plethystic logarithm of a series with constant term one."""
    if not H.comps[0] == SymFunc.one(H.k):
        raise ValueError("Log needs constant term one")
    cap, k = H.cap, H.k
    G = Series(cap, k, list(H.comps))
    G.comps[0] = SymFunc.zero(k)
    # ordinary log(1+G), truncated
    logh = Series(cap, k)
    power = Series.one(cap, k)
    for m in range(1, cap + 1):
        power = power * G
        logh = logh + power * Fraction((-1) ** (m - 1), m)
    out = Series(cap, k)
    for n in range(1, cap + 1):
        mu = mobius(n)
        if mu:
            out = out + adams(n, logh) * Fraction(mu, n)
    return out
