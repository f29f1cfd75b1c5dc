"""Symmetric functions in several alphabets over an exact coefficient field.

Everything is stored in the power-sum basis: the Hall pairing is diagonal
there, Adams operators act by index scaling, and plethystic substitution
becomes a ring-morphism extension. The other classical bases (monomial,
elementary, complete, Schur) are views obtained through exact conversion.

A SymFunc with k alphabets maps keys, which are k-tuples of partitions
(one power-sum index per alphabet), to coefficients. Coefficients are
RationalFunction or HookField values; ints and Fractions are coerced.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeffring import HookField, Polynomial, RationalFunction, rf
from .linalg import invert_matrix
from .partitions import Partition, partitions_of

_DEGREE_CAP = 8


class DegreeCapError(ValueError):
    """Input degree exceeds the configured exactness cap."""


def degree_cap():
    return _DEGREE_CAP


def set_degree_cap(n):
    global _DEGREE_CAP
    _DEGREE_CAP = int(n)


def _check_cap(n):
    if n > _DEGREE_CAP:
        raise DegreeCapError("degree %d exceeds cap %d" % (n, _DEGREE_CAP))


BASES = ("monomial", "elementary", "complete", "powersum", "schur")


# -- characters of the symmetric group ---------------------------------------


def mn_character(lam, rho):
    """Irreducible character of the symmetric group, chi^lam at cycle type rho.

    Computed by the Murnaghan-Nakayama border-strip recursion on beta
    numbers.
    """
    lam = Partition(lam)
    rho = Partition(rho)
    if lam.size != rho.size:
        raise ValueError("size mismatch: |%s| != |%s|" % (lam, rho))
    return _mn(tuple(lam), tuple(rho))


@lru_cache(maxsize=None)
def _mn(lam, rho):
    if not rho:
        return 1
    r = rho[0]
    rest = rho[1:]
    ell = len(lam)
    betas = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        crossed = sum(1 for c in betas if nb < c < b)
        new = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(v - (ell - 1 - i) for i, v in enumerate(new))
        new_lam = tuple(x for x in new_lam if x)
        total += (-1) ** crossed * _mn(new_lam, rest)
    return total


# -- expansions of classical bases in power sums ------------------------------


def _merge_parts(a, b):
    return Partition(sorted(tuple(a) + tuple(b), reverse=True))


def _convolve(da, db):
    out = {}
    for ka, ca in da.items():
        for kb, cb in db.items():
            key = _merge_parts(ka, kb)
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def h_to_p(n):
    """h_n as dict partition -> coefficient in the power-sum basis."""
    return {kappa: Fraction(1, kappa.z()) for kappa in partitions_of(n)}


@lru_cache(maxsize=None)
def e_to_p(n):
    return {kappa: Fraction(kappa.sign(), kappa.z()) for kappa in partitions_of(n)}


@lru_cache(maxsize=None)
def s_to_p(lam):
    lam = Partition(lam)
    return {
        kappa: Fraction(mn_character(lam, kappa), kappa.z())
        for kappa in partitions_of(lam.size)
        if mn_character(lam, kappa)
    }


@lru_cache(maxsize=None)
def hprod_to_p(mu):
    out = {Partition(): Fraction(1)}
    for part in Partition(mu):
        out = _convolve(out, h_to_p(part))
    return out


@lru_cache(maxsize=None)
def eprod_to_p(mu):
    out = {Partition(): Fraction(1)}
    for part in Partition(mu):
        out = _convolve(out, e_to_p(part))
    return out


@lru_cache(maxsize=None)
def _m_matrix(n):
    """Rows of m_mu in the power-sum basis, as nested dicts."""
    parts = partitions_of(n)
    index = {p: i for i, p in enumerate(parts)}
    size = len(parts)
    m_rows = [[Fraction(0)] * size for _ in range(size)]
    for nu in parts:
        row = hprod_to_p(nu)
        for kappa, c in row.items():
            m_rows[index[nu]][index[kappa]] = c * kappa.z()
    # m is dual to h: m_mu = sum_k B[mu][k] p_k with B = (M^T)^{-1}
    transposed = [[m_rows[j][i] for j in range(size)] for i in range(size)]
    inv = invert_matrix(transposed)
    return parts, inv


@lru_cache(maxsize=None)
def m_to_p(mu):
    mu = Partition(mu)
    parts, inv = _m_matrix(mu.size)
    row = inv[parts.index(mu)]
    return {kappa: c for kappa, c in zip(parts, row) if c}


def forgotten_to_p(mu):
    """omega(m_mu): the dual basis of the elementary basis."""
    return {kappa: c * kappa.sign() for kappa, c in m_to_p(mu).items()}


def basis_to_p(basis, mu):
    mu = Partition(mu)
    _check_cap(mu.size)
    if basis == "powersum":
        return {mu: Fraction(1)}
    if basis == "schur":
        return s_to_p(mu)
    if basis == "complete":
        return hprod_to_p(mu)
    if basis == "elementary":
        return eprod_to_p(mu)
    if basis == "monomial":
        return m_to_p(mu)
    raise ValueError("unknown basis %r" % basis)


# -- the SymFunc container ----------------------------------------------------


def _cf(value):
    if isinstance(value, (RationalFunction, HookField)):
        return value
    if isinstance(value, (int, Fraction, Polynomial)):
        return rf(value)
    raise TypeError("bad coefficient %r" % (value,))


def _is_zero_coeff(c):
    return c.is_zero()


class SymFunc:
    """Finite linear combination of power-sum tensors over k alphabets."""

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        clean = {}
        if terms:
            for key, c in terms.items():
                c = _cf(c)
                if _is_zero_coeff(c):
                    continue
                key = tuple(Partition(p) for p in key)
                if len(key) != k:
                    raise ValueError("key arity %d != %d alphabets" % (len(key), k))
                if key in clean:
                    c = clean[key] + c
                    if _is_zero_coeff(c):
                        del clean[key]
                        continue
                clean[key] = c
        self.terms = clean

    @staticmethod
    def zero(k=1):
        return SymFunc(k)

    @staticmethod
    def one(k=1):
        return SymFunc(k, {(Partition(),) * k: Fraction(1)})

    @staticmethod
    def from_p_dict(d, alphabet=0, k=1):
        """Lift a single-alphabet dict partition -> coeff into alphabet j of k."""
        empty = Partition()
        terms = {}
        for lam, c in d.items():
            key = [empty] * k
            key[alphabet] = Partition(lam)
            terms[tuple(key)] = c
        return SymFunc(k, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, key):
        key = tuple(Partition(p) for p in key)
        return self.terms.get(key, rf(0))

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.k != other.k:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(_eq_coeff(c, other.terms[k]) for k, c in self.terms.items())

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.k != other.k:
            raise ValueError("alphabet count mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            if key in out:
                s = out[key] + c
                if _is_zero_coeff(s):
                    del out[key]
                else:
                    out[key] = s
            else:
                out[key] = c
        res = SymFunc.__new__(SymFunc)
        res.k = self.k
        res.terms = out
        return res

    def __neg__(self):
        res = SymFunc.__new__(SymFunc)
        res.k = self.k
        res.terms = {key: -c for key, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            if self.k != other.k:
                raise ValueError("alphabet count mismatch")
            out = {}
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    key = tuple(_merge_parts(a, b) for a, b in zip(ka, kb))
                    c = ca * cb
                    if key in out:
                        s = out[key] + c
                        if _is_zero_coeff(s):
                            del out[key]
                        else:
                            out[key] = s
                    elif not _is_zero_coeff(c):
                        out[key] = c
            res = SymFunc.__new__(SymFunc)
            res.k = self.k
            res.terms = out
            return res
        c = _cf(other)
        if _is_zero_coeff(c):
            return SymFunc.zero(self.k)
        res = SymFunc.__new__(SymFunc)
        res.k = self.k
        res.terms = {key: v * c for key, v in self.terms.items()}
        return res

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c):
        return self.__mul__(c)

    def map_coefficients(self, func):
        out = {}
        for key, c in self.terms.items():
            v = func(c)
            if not _is_zero_coeff(_cf(v)):
                out[key] = _cf(v)
        res = SymFunc.__new__(SymFunc)
        res.k = self.k
        res.terms = out
        return res

    def degrees(self):
        """Set of per-alphabet degree tuples occurring in the support."""
        return {tuple(sum(p) for p in key) for key in self.terms}

    def homogeneous_degree(self):
        """The common per-alphabet degree tuple, or raise if mixed."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("not homogeneous: degrees %s" % sorted(degs))
        return next(iter(degs)) if degs else (0,) * self.k

    def homogeneous_component(self, d):
        """Terms whose total degree across all alphabets is d."""
        res = SymFunc.__new__(SymFunc)
        res.k = self.k
        res.terms = {
            key: c for key, c in self.terms.items() if sum(sum(p) for p in key) == d
        }
        return res

    def tensor(self, other):
        """Juxtapose alphabets: result has self.k + other.k alphabets."""
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                out[ka + kb] = ca * cb
        res = SymFunc.__new__(SymFunc)
        res.k = self.k + other.k
        res.terms = {k: c for k, c in out.items() if not _is_zero_coeff(c)}
        return res

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=lambda key: ([(-sum(p), tuple(p)) for p in key])):
            c = self.terms[key]
            mono = "*".join(
                "p%s[X%d]" % (list(p), j + 1) for j, p in enumerate(key) if len(p)
            )
            bits.append("(%s)%s" % (c, "*" + mono if mono else ""))
        return " + ".join(bits)

    def __repr__(self):
        return "SymFunc(k=%d, %s)" % (self.k, self)


def _eq_coeff(a, b):
    if isinstance(a, HookField) or isinstance(b, HookField):
        a = a if isinstance(a, HookField) else HookField(a)
        b = b if isinstance(b, HookField) else HookField(b)
    return a == b


def basis_element(basis, mu, alphabet=0, k=1):
    """The basis symmetric function b_mu placed in one alphabet."""
    return SymFunc.from_p_dict(basis_to_p(basis, mu), alphabet=alphabet, k=k)


def p_elem(mu, alphabet=0, k=1):
    return basis_element("powersum", mu, alphabet, k)


def h_elem(mu, alphabet=0, k=1):
    return basis_element("complete", mu, alphabet, k)


def e_elem(mu, alphabet=0, k=1):
    return basis_element("elementary", mu, alphabet, k)


def s_elem(mu, alphabet=0, k=1):
    return basis_element("schur", mu, alphabet, k)


def m_elem(mu, alphabet=0, k=1):
    return basis_element("monomial", mu, alphabet, k)


# -- pairings -----------------------------------------------------------------


def pair_alphabet(F, G, alphabet):
    """Hall pairing in one alphabet; that slot is consumed (left empty),
    everything else multiplies through."""
    if F.k != G.k:
        raise ValueError("alphabet count mismatch")
    j = alphabet
    empty = Partition()
    index = {}
    for key, c in G.terms.items():
        index.setdefault(key[j], []).append((key, c))
    out = SymFunc.zero(F.k)
    acc = {}
    for ka, ca in F.terms.items():
        lam = ka[j]
        z = lam.z()
        for kb, cb in index.get(lam, ()):
            key = tuple(
                empty if i == j else _merge_parts(a, b)
                for i, (a, b) in enumerate(zip(ka, kb))
            )
            c = ca * cb * z
            if key in acc:
                s = acc[key] + c
                if _is_zero_coeff(s):
                    del acc[key]
                else:
                    acc[key] = s
            elif not _is_zero_coeff(c):
                acc[key] = c
    out.terms = acc
    return out


def hall_scalar(F, G):
    """Full Hall pairing over every alphabet; returns a coefficient."""
    if F.k != G.k:
        raise ValueError("alphabet count mismatch")
    total = None
    for key, ca in F.terms.items():
        cb = G.terms.get(key)
        if cb is None:
            continue
        z = 1
        for p in key:
            z *= p.z()
        v = ca * cb * z
        total = v if total is None else total + v
    if total is None:
        return rf(0)
    return total


@lru_cache(maxsize=None)
def qt_factor(kappa):
    """prod_i (q^{kappa_i} - 1)(1 - t^{kappa_i}) as a Polynomial."""
    q = Polynomial.var("q")
    t = Polynomial.var("t")
    out = Polynomial.const(1)
    for part in kappa:
        out = out * (q**part - 1) * (1 - t**part)
    return out


def qt_scale(F, alphabet=0):
    """The substitution X -> (q-1)(1-t)X on one alphabet."""
    out = {}
    for key, c in F.terms.items():
        out[key] = c * rf(qt_factor(key[alphabet]))
    res = SymFunc.__new__(SymFunc)
    res.k = F.k
    res.terms = {k: c for k, c in out.items() if not _is_zero_coeff(c)}
    return res


def qt_pairing(F, G, alphabet=0):
    """(F, G)^{q,t} = <F[X], G[(q-1)(1-t)X]> on one alphabet."""
    return pair_alphabet(F, qt_scale(G, alphabet), alphabet)


def qt_pairing_scalar(F, G):
    if F.k != 1 or G.k != 1:
        raise ValueError("scalar qt pairing wants single-alphabet operands")
    return hall_scalar(F, qt_scale(G))


# -- basis conversion ----------------------------------------------------------


def dual_basis_to_p(basis, mu):
    """Power-sum expansion of the Hall-dual of basis element b_mu."""
    mu = Partition(mu)
    if basis == "powersum":
        return {mu: Fraction(1, mu.z())}
    if basis == "schur":
        return s_to_p(mu)
    if basis == "complete":
        return m_to_p(mu)
    if basis == "monomial":
        return hprod_to_p(mu)
    if basis == "elementary":
        return forgotten_to_p(mu)
    raise ValueError("unknown basis %r" % basis)


def convert(F, alphabet, basis):
    """Expansion coefficients of F in the target basis for one alphabet.

    Returns dict partition -> SymFunc over the remaining alphabets (the
    converted slot is left empty). For single-alphabet F the values are
    plain coefficients; use expand1 for that convenience.
    """
    degs = {sum(key[alphabet]) for key in F.terms}
    out = {}
    for d in sorted(degs):
        for mu in partitions_of(d):
            dual = SymFunc.from_p_dict(dual_basis_to_p(basis, mu), alphabet, F.k)
            val = pair_alphabet(dual, F, alphabet)
            if not val.is_zero():
                out[mu] = val
    return out


def expand1(F, basis):
    """Single-alphabet expansion: dict partition -> coefficient."""
    if F.k != 1:
        raise ValueError("expand1 wants a single-alphabet function")
    return {mu: val.terms[(Partition(),)] for mu, val in convert(F, 0, basis).items()}


_BASIS_TAGS = {
    "schur": "s",
    "complete": "h",
    "elementary": "e",
    "powersum": "p",
    "monomial": "m",
}


def format_basis_expansion(expansion, basis):
    """Basis-tagged text form, e.g. 's[2,1] + (q + t)*s[1,1,1]'."""
    tag = _BASIS_TAGS[basis]
    bits = []
    for mu in sorted(expansion, reverse=True):
        c = expansion[mu]
        if _is_zero_coeff(_cf(c)):
            continue
        body = "%s%s" % (tag, Partition(mu))
        if _cf(c) == rf(1):
            bits.append(body)
        else:
            bits.append("(%s)*%s" % (c, body))
    return " + ".join(bits) or "0"


def json_terms(F, basis="powersum"):
    """JSON-ready list of (basis, partition key, coefficient) triples.

    HookField coefficients export as {"base": ..., "odd": ...} objects so
    every piece parses back through the polynomial grammar.
    """
    out = []
    for key in sorted(F.terms, key=lambda key: [(sum(p), tuple(p)) for p in key]):
        c = F.terms[key]
        if isinstance(c, HookField):
            coeff = {"base": str(c.base), "odd": str(c.odd)}
        else:
            coeff = str(c)
        listed = [list(p) for p in key] if F.k > 1 else list(key[0])
        out.append([basis, listed, coeff])
    return out
