"""Sparse multivariate polynomials with exact integer coefficients.

A term is a tuple ((var, exp), ...) sorted by variable index, with all
exponents positive; the empty tuple is the constant term.  Variables are
positive integers (Schwinger indices).  Coefficients are Python ints, so
nothing ever overflows.

Canonical term order is graded lexicographic: higher total degree first,
ties broken by the exponent vector read along increasing variable index
(a higher power of an earlier variable wins).  Serialization sorts terms
by this order, leading term first.
"""

from __future__ import annotations

from functools import cmp_to_key
from math import gcd, isqrt

Term = tuple  # tuple[tuple[int, int], ...]


def _term_mul(s: Term, t: Term) -> Term:
    if not s:
        return t
    if not t:
        return s
    merged = dict(s)
    for v, e in t:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def _term_degree(t: Term) -> int:
    return sum(e for _, e in t)


def _glex_cmp(s: Term, t: Term) -> int:
    """Return negative if s is smaller than t in graded lex."""
    ds, dt = _term_degree(s), _term_degree(t)
    if ds != dt:
        return -1 if ds < dt else 1
    i = j = 0
    while i < len(s) and j < len(t):
        vs, es = s[i]
        vt, et = t[j]
        if vs != vt:
            # the term with a positive exponent on the earlier variable wins
            return 1 if vs < vt else -1
        if es != et:
            return 1 if es > et else -1
        i += 1
        j += 1
    if i < len(s):
        return 1
    if j < len(t):
        return -1
    return 0


_GLEX_KEY = cmp_to_key(_glex_cmp)


class MultiPoly:
    """Immutable sparse polynomial in Z[x1, x2, ...]."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None, _clean: bool = True):
        if terms is None:
            terms = {}
        if _clean:
            terms = {t: c for t, c in terms.items() if c}
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return _ZERO

    @staticmethod
    def one() -> "MultiPoly":
        return _ONE

    @staticmethod
    def const(c: int) -> "MultiPoly":
        if c == 0:
            return _ZERO
        return MultiPoly({(): c}, _clean=False)

    @staticmethod
    def var(i: int, exp: int = 1) -> "MultiPoly":
        assert i >= 1 and exp >= 1
        return MultiPoly({((i, exp),): 1}, _clean=False)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def const_value(self) -> int:
        assert self.is_const()
        return self.terms.get((), 0)

    def variables(self) -> tuple:
        vs = set()
        for t in self.terms:
            for v, _ in t:
                vs.add(v)
        return tuple(sorted(vs))

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(_term_degree(t) for t in self.terms)

    def degree_in(self, var: int) -> int:
        d = 0
        for t in self.terms:
            for v, e in t:
                if v == var and e > d:
                    d = e
        return d

    def num_terms(self) -> int:
        return len(self.terms)

    def leading_term(self) -> tuple:
        """(term, coeff) maximal in graded lex order."""
        assert self.terms, "zero polynomial has no leading term"
        t = max(self.terms, key=_GLEX_KEY)
        return t, self.terms[t]

    def sign_normalized(self) -> "MultiPoly":
        """Negate if the leading coefficient is negative."""
        if not self.terms:
            return self
        _, c = self.leading_term()
        return -self if c < 0 else self

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t, 0) + c
            if s:
                out[t] = s
            elif t in out:
                del out[t]
        return MultiPoly(out, _clean=False)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({t: -c for t, c in self.terms.items()}, _clean=False)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if not self.terms or not other.terms:
            return _ZERO
        if other.is_const():
            c0 = other.const_value()
            return MultiPoly({t: c * c0 for t, c in self.terms.items()}, _clean=False)
        if self.is_const():
            c0 = self.const_value()
            return MultiPoly({t: c * c0 for t, c in other.terms.items()}, _clean=False)
        a, b = self.terms, other.terms
        if len(a) * len(b) > 2048:
            packed = _mul_packed(a, b)
            if packed is not None:
                return packed
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for t1, c1 in a.items():
            for t2, c2 in b.items():
                t = _term_mul(t1, t2)
                s = out.get(t, 0) + c1 * c2
                if s:
                    out[t] = s
                elif t in out:
                    del out[t]
        return MultiPoly(out, _clean=False)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        assert n >= 0
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_const() and self.const_value() == other
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def key(self):
        """Hashable canonical key (for memo tables)."""
        return tuple(sorted(self.terms.items()))

    # -- coefficient extraction and substitution ---------------------------

    def coeffs_in(self, var: int) -> dict:
        """Split into {exponent of var: polynomial in the other variables}."""
        out: dict = {}
        for t, c in self.terms.items():
            e = 0
            rest = []
            for v, ev in t:
                if v == var:
                    e = ev
                else:
                    rest.append((v, ev))
            d = out.setdefault(e, {})
            rt = tuple(rest)
            d[rt] = d.get(rt, 0) + c
        return {e: MultiPoly(d) for e, d in out.items()}

    def coefficient_of(self, var: int, k: int) -> "MultiPoly":
        return self.coeffs_in(var).get(k, _ZERO)

    def substitute(self, var: int, value) -> "MultiPoly":
        """Substitute an int or a MultiPoly for one variable (Horner)."""
        parts = self.coeffs_in(var)
        if not parts or list(parts) == [0]:
            return self
        value = _coerce(value)
        exps = sorted(parts, reverse=True)
        result = parts[exps[0]]
        for prev, e in zip(exps, exps[1:]):
            result = result * value ** (prev - e) + parts[e]
        result = result * value ** exps[-1]
        return result

    def rename(self, mapping: dict) -> "MultiPoly":
        """Rename variables; mapping must be injective on the support."""
        used = self.variables()
        img = [mapping.get(v, v) for v in used]
        assert len(set(img)) == len(img), "rename is not injective"
        out = {}
        for t, c in self.terms.items():
            out[tuple(sorted((mapping.get(v, v), e) for v, e in t))] = c
        return MultiPoly(out, _clean=False)

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def divexact_int(self, d: int) -> "MultiPoly":
        assert d != 0
        out = {}
        for t, c in self.terms.items():
            q, r = divmod(c, d)
            assert r == 0, "inexact integer division of polynomial"
            out[t] = q
        return MultiPoly(out, _clean=False)

    # -- square root -------------------------------------------------------

    def sqrt(self):
        """Exact square root, or None.  The result is verified by squaring
        and sign-normalized so its leading canonical term is positive."""
        r = self._sqrt_rec()
        if r is None:
            return None
        r = r.sign_normalized()
        if r * r != self:
            return None
        return r

    def _sqrt_rec(self):
        if not self.terms:
            return _ZERO
        if self.is_const():
            c = self.const_value()
            if c < 0:
                return None
            s = isqrt(c)
            return MultiPoly.const(s) if s * s == c else None
        # recurse on the variable of smallest positive degree
        var = min(self.variables(), key=lambda v: (self.degree_in(v), v))
        parts = self.coeffs_in(var)
        d = max(parts)
        if d % 2:
            return None
        lead = parts[d]._sqrt_rec()
        if lead is None:
            return None
        half = d // 2
        r = lead * MultiPoly.var(var) ** half
        rem = self - r * r
        two_lead = lead * 2
        for k in range(half - 1, -1, -1):
            top = rem.coefficient_of(var, half + k)
            if top.is_zero():
                continue
            t = _divexact_poly(top, two_lead)
            if t is None:
                return None
            piece = t * MultiPoly.var(var) ** k if k else t
            rem = rem - piece * (2 * r + piece)
            r = r + piece
        if not rem.is_zero():
            return None
        return r

    # -- evaluation over finite fields --------------------------------------

    def eval_fq(self, point, field) -> int:
        """Evaluate at a point with coordinates in F_q (encoded ints).

        `point` maps 1-based variable index i to point[i-1]; it must cover
        every active variable.  Coefficients are reduced through Z -> F_p.
        """
        vs = self.variables()
        if vs and len(point) < vs[-1]:
            raise ValueError("point too short for polynomial variables")
        acc = 0
        for t, c in self.terms.items():
            val = field.from_int(c)
            for v, e in t:
                val = field.mul(val, field.pow(point[v - 1], e))
                if val == 0:
                    break
            acc = field.add(acc, val)
        return acc

    # -- text format ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda tc: _GLEX_KEY(tc[0]), reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for t, c in self.sorted_terms():
            mono = "*".join(f"x{v}^{e}" if e > 1 else f"x{v}" for v, e in t)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"


def _coerce(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly.const(x)
    raise TypeError(f"cannot coerce {type(x)!r} to MultiPoly")


# Packed fast path for large products: exponents become 4-bit digits of an
# integer key, so monomial multiplication is integer addition.  Only valid
# when both factors have per-variable degree <= 7 (sums stay below 16) and
# variables <= 64 (keys stay reasonably small).


def _pack_ok(terms: dict) -> bool:
    for t in terms:
        for v, e in t:
            if e > 7 or v > 64:
                return False
    return True


def _pack_term(t: Term) -> int:
    k = 0
    for v, e in t:
        k |= e << ((v - 1) << 2)
    return k


def _unpack_term(k: int) -> Term:
    t = []
    v = 1
    while k:
        e = k & 15
        if e:
            t.append((v, e))
        k >>= 4
        v += 1
    return tuple(t)


def _mul_packed(a: dict, b: dict):
    if not (_pack_ok(a) and _pack_ok(b)):
        return None
    pa = [(_pack_term(t), c) for t, c in a.items()]
    pb = [(_pack_term(t), c) for t, c in b.items()]
    if len(pa) < len(pb):
        pa, pb = pb, pa
    out: dict = {}
    get = out.get
    for k1, c1 in pa:
        for k2, c2 in pb:
            k = k1 + k2
            s = get(k, 0) + c1 * c2
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return MultiPoly({_unpack_term(k): c for k, c in out.items()}, _clean=False)


_ZERO = MultiPoly({}, _clean=False)
_ONE = MultiPoly({(): 1}, _clean=False)


def _divexact_poly(p: MultiPoly, g: MultiPoly):
    """Exact polynomial division p/g, or None if not divisible."""
    if g.is_zero():
        return None
    if p.is_zero():
        return _ZERO
    if g.is_const():
        d = g.const_value()
        if any(c % d for c in p.terms.values()):
            return None
        return p.divexact_int(d)
    gt, gc = g.leading_term()
    rem = dict(p.terms)
    quot: dict = {}
    while rem:
        rt = max(rem, key=_GLEX_KEY)
        rc = rem[rt]
        # divide leading terms
        gd = dict(gt)
        qt = []
        ok = True
        for v, e in rt:
            ge = gd.pop(v, 0)
            if e < ge:
                ok = False
                break
            if e > ge:
                qt.append((v, e - ge))
        if not ok or gd:
            return None
        qc, r = divmod(rc, gc)
        if r:
            return None
        qt = tuple(qt)
        quot[qt] = quot.get(qt, 0) + qc
        for t2, c2 in g.terms.items():
            t = _term_mul(qt, t2)
            s = rem.get(t, 0) - qc * c2
            if s:
                rem[t] = s
            elif t in rem:
                del rem[t]
    return MultiPoly(quot, _clean=False)


def divexact(p: MultiPoly, g: MultiPoly) -> MultiPoly:
    q = _divexact_poly(p, g)
    assert q is not None, "inexact polynomial division"
    return q


def poly_sqrt(p: MultiPoly):
    return p.sqrt()


def resultant_linear(f: MultiPoly, g: MultiPoly, var: int) -> MultiPoly:
    """[f, g]_var = f^1 g_1 - f_1 g^1 for f, g of degree <= 1 in var."""
    if f.degree_in(var) > 1 or g.degree_in(var) > 1:
        raise ValueError(f"resultant_linear: degree > 1 in x{var}")
    f1 = f.coefficient_of(var, 1)
    f0 = f.coefficient_of(var, 0)
    g1 = g.coefficient_of(var, 1)
    g0 = g.coefficient_of(var, 0)
    return f1 * g0 - f0 * g1


# -- parser -----------------------------------------------------------------


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical text format: integer coefficients, x<i>, ^, *."""
    s = text.replace(" ", "")
    if not s or s == "0":
        return _ZERO
    result = _ZERO
    i = 0
    n = len(s)
    while i < n:
        sign = 1
        while i < n and s[i] in "+-":
            if s[i] == "-":
                sign = -sign
            i += 1
        coeff = None
        term: dict = {}
        while True:
            if i < n and s[i].isdigit():
                j = i
                while j < n and s[j].isdigit():
                    j += 1
                val = int(s[i:j])
                i = j
                coeff = val if coeff is None else coeff * val
            elif i < n and s[i] == "x":
                j = i + 1
                while j < n and s[j].isdigit():
                    j += 1
                if j == i + 1:
                    raise ValueError(f"bad variable at {i} in {text!r}")
                v = int(s[i + 1:j])
                i = j
                e = 1
                if i < n and s[i] == "^":
                    j = i + 1
                    while j < n and s[j].isdigit():
                        j += 1
                    e = int(s[i + 1:j])
                    i = j
                term[v] = term.get(v, 0) + e
            else:
                raise ValueError(f"unexpected character at {i} in {text!r}")
            if i < n and s[i] == "*":
                i += 1
                continue
            break
        c = sign * (1 if coeff is None else coeff)
        t = tuple(sorted(term.items()))
        result = result + MultiPoly({t: c})
    return result
