"""Exact scalar arithmetic for quantum link invariants.

Three value types, all immutable:

* :class:`LaurentQT` -- sparse Laurent polynomials in ``q`` and ``t`` with
  arbitrary-precision integer coefficients.  Exponents may be rational:
  fractional twist factors such as ``q**(n/m * kappa)`` appear in the middle
  of torus-link computations, while genuinely invariant end results must have
  integer exponents (``assert_integral``).
* :class:`RationalQT` -- quotients of two ``LaurentQT`` values.  Equality is
  decided by cross-multiplication; normalisation is lazy apart from a cheap
  cancellation pass against the factor family ``q**k - q**-k``, which is where
  every denominator in this engine comes from.
* :class:`HSeries` -- truncated power series in ``h`` under ``q = exp(h)``,
  with Laurent-in-``t`` coefficients over the rationals, used for ``q -> 1``
  limits.

All operations are pure functions of their inputs and safe to share across
threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class NonIntegralExponent(ValueError):
    """A value required to be an honest Laurent polynomial has fractional exponents."""


class TruncationInsufficient(ArithmeticError):
    """The series truncation order was too small to expose the leading term."""


class NonLaurentCoefficient(ArithmeticError):
    """A series division produced a coefficient outside the t-Laurent ring."""


def _exp(x):
    """Normalise an exponent to int when integral, Fraction otherwise."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


class LaurentQT:
    """Sparse integer Laurent polynomial in ``q`` and ``t``.

    Terms map exponent pairs ``(e_q, e_t)`` to nonzero integer coefficients.
    Zero coefficients are never stored, so equality is plain term-set
    equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (eq, et), c in items:
                c = int(c)
                if not c:
                    continue
                key = (_exp(eq), _exp(et))
                c0 = data.get(key)
                if c0 is None:
                    data[key] = c
                else:
                    c = c0 + c
                    if c:
                        data[key] = c
                    else:
                        del data[key]
        self._terms = data
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def from_int(cls, n):
        return cls({(0, 0): n}) if n else _ZERO

    @classmethod
    def monomial(cls, coeff=1, e_q=0, e_t=0):
        return cls({(e_q, e_t): coeff})

    # -- container behaviour -----------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentQT.from_int(other)
        if not isinstance(other, LaurentQT):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self):
        """Terms sorted by (e_t, e_q); the canonical output order."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentQT.from_int(other)
        if not isinstance(other, LaurentQT):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        data = dict(self._terms)
        for key, c in other._terms.items():
            c0 = data.get(key)
            if c0 is None:
                data[key] = c
            else:
                c = c0 + c
                if c:
                    data[key] = c
                else:
                    del data[key]
        out = LaurentQT.__new__(LaurentQT)
        out._terms = data
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentQT.__new__(LaurentQT)
        out._terms = {k: -c for k, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentQT.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentQT.from_int(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return _ZERO
            out = LaurentQT.__new__(LaurentQT)
            out._terms = {k: c * other for k, c in self._terms.items()}
            out._hash = None
            return out
        if not isinstance(other, LaurentQT):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        # fractional exponents may sum to integers; renormalise keys in that case
        mixed = not (self.is_integral() and other.is_integral())
        data = {}
        for (eq1, et1), c1 in a.items():
            for (eq2, et2), c2 in b.items():
                if mixed:
                    key = (_exp(eq1 + eq2), _exp(et1 + et2))
                else:
                    key = (eq1 + eq2, et1 + et2)
                c = data.get(key)
                if c is None:
                    data[key] = c1 * c2
                else:
                    c += c1 * c2
                    if c:
                        data[key] = c
                    else:
                        del data[key]
        out = LaurentQT.__new__(LaurentQT)
        out._terms = data
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers of a polynomial")
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def content(self):
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = gcd(g, abs(c))
            if g == 1:
                return 1
        return g

    def leading(self):
        """(exponent pair, coefficient) of the lex-largest term."""
        key = max(self._terms)
        return key, self._terms[key]

    def trailing(self):
        key = min(self._terms)
        return key, self._terms[key]

    def exponent_box(self):
        """((min_eq, max_eq), (min_et, max_et)) over the support."""
        eqs = [k[0] for k in self._terms]
        ets = [k[1] for k in self._terms]
        return (min(eqs), max(eqs)), (min(ets), max(ets))

    def is_integral(self):
        """True when every stored exponent is an integer."""
        return all(isinstance(eq, int) and isinstance(et, int) for eq, et in self._terms)

    def assert_integral(self):
        if not self.is_integral():
            raise NonIntegralExponent(f"fractional exponent in {self!r}")
        return self

    # -- substitutions -------------------------------------------------------

    def substitute_power(self, d):
        """q -> q**d, t -> t**d applied exactly to every exponent."""
        d = _exp(d)
        out = LaurentQT.__new__(LaurentQT)
        out._terms = {(_exp(eq * d), _exp(et * d)): c for (eq, et), c in self._terms.items()}
        out._hash = None
        return out

    def mirror(self):
        """q -> 1/q, t -> 1/t."""
        out = LaurentQT.__new__(LaurentQT)
        out._terms = {(-eq, -et): c for (eq, et), c in self._terms.items()}
        out._hash = None
        return out

    def conj_q(self):
        """q -> -1/q.  Requires integer q-exponents."""
        data = {}
        for (eq, et), c in self._terms.items():
            if not isinstance(eq, int):
                raise NonIntegralExponent("q -> -1/q needs integer q-exponents")
            data[(-eq, et)] = c if eq % 2 == 0 else -c
        out = LaurentQT.__new__(LaurentQT)
        out._terms = data
        out._hash = None
        return out

    def coefficient_of_t(self, et):
        """The q-Laurent slice at a fixed t-exponent, as {e_q: coeff}."""
        et = _exp(et)
        return {eq: c for (eq, e), c in self._terms.items() if e == et}

    # -- serialization -------------------------------------------------------

    def to_records(self):
        """JSON form: [e_q_num, e_q_den, e_t_num, e_t_den, coeff-as-string] per term."""
        recs = []
        for (eq, et), c in self.sorted_terms():
            fq, ft = Fraction(eq), Fraction(et)
            recs.append([fq.numerator, fq.denominator, ft.numerator, ft.denominator, str(c)])
        return recs

    @classmethod
    def from_records(cls, recs):
        return cls(
            {(Fraction(a, b), Fraction(n, d)): int(c) for a, b, n, d, c in recs}
        )

    def __repr__(self):
        return f"LaurentQT({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


_ZERO = LaurentQT()
_ONE = LaurentQT({(0, 0): 1})


def _format_power(sym, e):
    if e == 0:
        return ""
    if e == 1:
        return sym
    return f"{sym}^{e}"


def format_laurent(f):
    """Human-readable form with terms sorted by (e_t, e_q)."""
    if not f:
        return "0"
    parts = []
    for (eq, et), c in f.sorted_terms():
        mono = "*".join(s for s in (_format_power("q", eq), _format_power("t", et)) if s)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- distinguished elements ---------------------------------------------------


def q_power(e):
    return LaurentQT({(e, 0): 1})


def t_power(e):
    return LaurentQT({(0, e): 1})


def q_bracket(k):
    """q**k - q**-k."""
    if k == 0:
        return _ZERO
    return LaurentQT({(k, 0): 1, (-k, 0): -1})


def t_bracket(k):
    """t**k - t**-k."""
    if k == 0:
        return _ZERO
    return LaurentQT({(0, k): 1, (0, -k): -1})


def q_brace(p):
    """(q**p - q**-p)/(q - q**-1) as a Laurent polynomial."""
    return LaurentQT({(p - 1 - 2 * j, 0): 1 for j in range(p)})


_Z2_CACHE = [_ONE]


def z_square_power(g):
    """(q - q**-1)**(2g), cached."""
    while len(_Z2_CACHE) <= g:
        _Z2_CACHE.append(_Z2_CACHE[-1] * (q_bracket(1) * q_bracket(1)))
    return _Z2_CACHE[g]


# -- division and membership --------------------------------------------------


def exact_div(a, b):
    """Exact quotient a/b in the Laurent ring, or None when b does not divide a.

    Monomials are units here, so the only obstructions are coefficient
    divisibility and support geometry; the candidate quotient support is
    confined to the exponent box derived from the factor boxes, which also
    bounds the division loop.
    """
    if not isinstance(a, LaurentQT) or not isinstance(b, LaurentQT):
        raise TypeError("exact_div expects LaurentQT operands")
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return _ZERO
    (aq, AQ), (at_, AT) = a.exponent_box()
    (bq, BQ), (bt, BT) = b.exponent_box()
    lo_q, hi_q = aq - bq, AQ - BQ
    lo_t, hi_t = at_ - bt, AT - BT
    if lo_q > hi_q or lo_t > hi_t:
        return None
    (lead_exp, lead_c) = b.leading()
    rem = dict(a._terms)
    quo = {}
    while rem:
        key = max(rem)
        c = rem[key]
        weq, wet = key[0] - lead_exp[0], key[1] - lead_exp[1]
        if not (lo_q <= weq <= hi_q and lo_t <= wet <= hi_t):
            return None
        if c % lead_c:
            return None
        w = c // lead_c
        quo[(weq, wet)] = w
        for (eq, et), bc in b._terms.items():
            k2 = (eq + weq, et + wet)
            r = rem.get(k2, 0) - w * bc
            if r:
                rem[k2] = r
            else:
                rem.pop(k2, None)
    out = LaurentQT.__new__(LaurentQT)
    out._terms = quo
    out._hash = None
    return out


def zsquare_decompose(f, allowed_pole=0):
    """Write f = sum c[g, Q] * (q - 1/q)**(2g) * t**Q with integer c, g >= -allowed_pole.

    Returns the coefficient table or None when no such expansion exists.  The
    peel is greedy per t-power: the top q-degree term is matched against the
    leading term of the corresponding z-power.
    """
    if not isinstance(f, LaurentQT):
        raise TypeError("zsquare_decompose expects a LaurentQT")
    if allowed_pole:
        f = f * z_square_power(allowed_pole)
    if not f:
        return {}
    if not f.is_integral():
        return None
    slices = {}
    for (eq, et), c in f._terms.items():
        slices.setdefault(et, {})[eq] = c
    table = {}
    for Q, poly in sorted(slices.items()):
        while poly:
            d = max(poly)
            if d < 0 or d % 2:
                return None
            g = d // 2
            c = poly[d]
            for (eq, _), zc in z_square_power(g)._terms.items():
                r = poly.get(eq, 0) - c * zc
                if r:
                    poly[eq] = r
                else:
                    poly.pop(eq, None)
            table[(g - allowed_pole, Q)] = c
    return table


def zsquare_recompose(table):
    """Inverse of zsquare_decompose (requires g >= 0 throughout)."""
    total = _ZERO
    for (g, Q), c in table.items():
        if g < 0:
            raise ValueError("cannot recompose a pole term into a polynomial")
        total = total + z_square_power(g) * t_power(Q) * c
    return total


# -- rational functions --------------------------------------------------------


_BRACKET_CANCEL_LIMIT = 64


class RationalQT:
    """Quotient num/den of Laurent polynomials, den nonzero.

    Equality is decided by cross-multiplication.  There is no global gcd
    normalisation; ``reduced()`` cancels integer content, a monomial unit and
    any shared ``q**k - q**-k`` factors, which covers every denominator this
    engine constructs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = LaurentQT.from_int(num)
        if den is None:
            den = _ONE
        elif isinstance(den, int):
            den = LaurentQT.from_int(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = _ONE
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalQT is immutable")

    @classmethod
    def from_laurent(cls, f):
        return cls(f)

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return cls(LaurentQT.from_int(fr.numerator), LaurentQT.from_int(fr.denominator))

    @property
    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalQT):
            return x
        if isinstance(x, LaurentQT):
            return RationalQT(x)
        if isinstance(x, int):
            return RationalQT(LaurentQT.from_int(x))
        if isinstance(x, Fraction):
            return RationalQT.from_fraction(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RationalQT(self.num + other.num, self.den)._cancel_content()
        k = exact_div(other.den, self.den)
        if k is not None:
            return RationalQT(self.num * k + other.num, other.den)._cancel_content()
        k = exact_div(self.den, other.den)
        if k is not None:
            return RationalQT(self.num + other.num * k, self.den)._cancel_content()
        return RationalQT(
            self.num * other.den + other.num * self.den, self.den * other.den
        ).reduced()

    __radd__ = __add__

    def __neg__(self):
        return RationalQT(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return RationalQT(_ZERO)
        # diagonal cancellation keeps factored denominators small
        n1, d2 = _cross_cancel(self.num, other.den)
        n2, d1 = _cross_cancel(other.num, self.den)
        return RationalQT(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def reciprocal(self):
        if not self.num:
            raise ZeroDivisionError("reciprocal of zero")
        return RationalQT(self.den, self.num)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("integer powers only")
        if k < 0:
            return self.reciprocal() ** (-k)
        return RationalQT(self.num**k, self.den**k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    @classmethod
    def sum(cls, items):
        """Sum many values, grouping by common denominator first."""
        groups = {}
        for x in items:
            x = cls._coerce(x)
            groups[x.den] = groups.get(x.den, _ZERO) + x.num
        total = cls(_ZERO)
        for den, num in groups.items():
            total = total + cls(num, den)
        return total

    # -- normalisation --------------------------------------------------------

    def _cancel_content(self):
        if not self.num:
            return RationalQT(_ZERO)
        g = gcd(self.num.content(), self.den.content())
        if g > 1:
            return RationalQT(exact_div(self.num, LaurentQT.from_int(g)),
                              exact_div(self.den, LaurentQT.from_int(g)))
        return self

    def reduced(self):
        """Cancel shared content, a denominator monomial unit, and q-bracket factors."""
        num, den = self.num, self.den
        if not num:
            return RationalQT(_ZERO)
        if len(den) == 1:
            # monomial denominator is a unit: fold into the numerator
            (eq, et), c = den.leading()
            num = num * LaurentQT({(-eq, -et): 1})
            if c < 0:
                num, c = -num, -c
            if c != 1:
                g = gcd(num.content(), c)
                num = exact_div(num, LaurentQT.from_int(g))
                c //= g
            return RationalQT(num, LaurentQT.from_int(c))
        (bq, BQ), _ = den.exponent_box()
        span = BQ - bq
        max_k = min(_BRACKET_CANCEL_LIMIT, int(span) if isinstance(span, int) else 0)
        for k in range(max_k, 0, -1):
            br = q_bracket(k)
            while True:
                d2 = exact_div(den, br)
                if d2 is None:
                    break
                n2 = exact_div(num, br)
                if n2 is None:
                    break
                num, den = n2, d2
                if len(den) == 1:
                    return RationalQT(num, den).reduced()
        out = RationalQT(num, den)._cancel_content()
        # normalise the denominator sign by its leading coefficient
        if out.den.leading()[1] < 0:
            out = RationalQT(-out.num, -out.den)
        return out

    # -- conversions ------------------------------------------------------------

    def as_laurent(self):
        """The value as a Laurent polynomial, or None when den does not divide num."""
        if not self.num:
            return _ZERO
        if self.den == _ONE:
            return self.num
        q = exact_div(self.num, self.den)
        if q is not None:
            return q
        r = self.reduced()
        if r.den == _ONE:
            return r.num
        return exact_div(r.num, r.den)

    def substitute_power(self, d):
        return RationalQT(self.num.substitute_power(d), self.den.substitute_power(d))

    def mirror(self):
        return RationalQT(self.num.mirror(), self.den.mirror())

    def conj_q(self):
        return RationalQT(self.num.conj_q(), self.den.conj_q())

    def to_json(self):
        return {"num": self.num.to_records(), "den": self.den.to_records()}

    def __repr__(self):
        if self.den == _ONE:
            return f"RationalQT({format_laurent(self.num)!r})"
        return f"RationalQT({format_laurent(self.num)!r} / {format_laurent(self.den)!r})"


def _cross_cancel(num, den):
    """Cancel obvious shared structure between a numerator and an unrelated denominator."""
    if len(den) == 1:
        (eq, et), c = den.leading()
        if c in (1, -1):
            return num * LaurentQT({(-eq, -et): c}), _ONE
    q = exact_div(num, den)
    if q is not None:
        return q, _ONE
    return num, den


def substitute_power(f, d):
    """q -> q**d, t -> t**d on a LaurentQT or RationalQT."""
    if d < 1:
        raise ValueError("the substitution power must be a positive integer")
    return f.substitute_power(d)


ZERO_RATIONAL = RationalQT(_ZERO)
ONE_RATIONAL = RationalQT(_ONE)


# -- h-series -------------------------------------------------------------------


def _tpoly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        r = out.get(e, 0) + c
        if r:
            out[e] = r
        else:
            out.pop(e, None)
    return out


def _tpoly_scale(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}

def _tpoly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            r = out.get(e, 0) + c1 * c2
            if r:
                out[e] = r
            else:
                out.pop(e, None)
    return out


def _tpoly_exact_div(a, b):
    """Exact division of t-Laurent polynomials over Q, or None."""
    if not b:
        raise ZeroDivisionError
    if not a:
        return {}
    lo = min(a) - min(b)
    hi = max(a) - max(b)
    if lo > hi:
        return None
    lead = max(b)
    rem = dict(a)
    quo = {}
    while rem:
        e = max(rem)
        we = e - lead
        if not (lo <= we <= hi):
            return None
        w = rem[e] / b[lead]
        quo[we] = w
        for eb, cb in b.items():
            k = eb + we
            r = rem.get(k, 0) - w * cb
            if r:
                rem[k] = r
            else:
                rem.pop(k, None)
    return quo


class HSeries:
    """h**valuation * (c_0 + c_1 h + ...), coefficients Laurent in t over Q.

    ``coeffs[0]`` is nonzero unless the whole series is zero (represented with
    valuation 0 and an all-zero coefficient list).
    """

    __slots__ = ("valuation", "coeffs")

    def __init__(self, valuation, coeffs):
        coeffs = [dict(c) for c in coeffs]
        if coeffs and not coeffs[0]:
            # re-anchor so the first coefficient is nonzero (or the series is zero)
            shift = 0
            while shift < len(coeffs) and not coeffs[shift]:
                shift += 1
            if shift == len(coeffs):
                valuation, coeffs = 0, [{} for _ in coeffs]
            else:
                valuation += shift
                coeffs = coeffs[shift:] + [{} for _ in range(shift)]
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "coeffs", tuple(tuple(sorted(c.items())) for c in coeffs))

    def __setattr__(self, *a):
        raise AttributeError("HSeries is immutable")

    @property
    def order(self):
        return len(self.coeffs)

    @property
    def is_zero(self):
        return all(not c for c in self.coeffs)

    def coefficient(self, i):
        """The i-th coefficient past the valuation, as {t-exponent: Fraction}."""
        return dict(self.coeffs[i])

    def __eq__(self, other):
        if not isinstance(other, HSeries):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.valuation == other.valuation and self.coeffs == other.coeffs

    __hash__ = None

    def truncated(self, k):
        return HSeries(self.valuation, [dict(c) for c in self.coeffs[:k]])

    def __mul__(self, other):
        if not isinstance(other, HSeries):
            return NotImplemented
        k = min(self.order, other.order)
        if self.is_zero or other.is_zero:
            return HSeries(0, [{} for _ in range(k)])
        out = [{} for _ in range(k)]
        a = [dict(c) for c in self.coeffs]
        b = [dict(c) for c in other.coeffs]
        for i in range(k):
            for j in range(k - i):
                out[i + j] = _tpoly_add(out[i + j], _tpoly_mul(a[i], b[j]))
        return HSeries(self.valuation + other.valuation, out)

    def __truediv__(self, other):
        if not isinstance(other, HSeries):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero series")
        if self.is_zero:
            return HSeries(0, [{} for _ in self.coeffs])
        k = min(self.order, other.order)
        a = [dict(c) for c in self.coeffs[:k]]
        b = [dict(c) for c in other.coeffs[:k]]
        lead = b[0]
        out = []
        for i in range(k):
            acc = a[i]
            for j in range(i):
                acc = _tpoly_add(acc, _tpoly_scale(_tpoly_mul(out[j], b[i - j]), -1))
            c = _tpoly_exact_div(acc, lead)
            if c is None:
                raise NonLaurentCoefficient(
                    "series division left the t-Laurent ring at order %d" % i
                )
            out.append(c)
        return HSeries(self.valuation - other.valuation, out)

    def limit(self):
        """The value at h = 0: zero map for positive valuation, error for a pole."""
        if self.is_zero:
            return {}
        if self.valuation > 0:
            return {}
        if self.valuation < 0:
            raise ArithmeticError("pole at q = 1")
        return self.coefficient(0)

    def __repr__(self):
        return f"HSeries(val={self.valuation}, coeffs={[dict(c) for c in self.coeffs]!r})"


def _laurent_hseries(f, K):
    """Expand a LaurentQT at q = exp(h) to K coefficients past the valuation.

    Raises TruncationInsufficient when the first K coefficients all vanish for
    a nonzero input.
    """
    if not f:
        return HSeries(0, [{} for _ in range(K)])
    horizon = 2 * K
    slices = {}  # t-exponent -> list of (e_q, coeff)
    for (eq, et), c in f._terms.items():
        slices.setdefault(et, []).append((Fraction(eq), c))
    coeffs = []
    fact = 1
    for k in range(horizon):
        if k:
            fact *= k
        row = {}
        for et, terms in slices.items():
            v = sum(c * (eq**k) for eq, c in terms)
            if v:
                row[et] = Fraction(v, fact)
        coeffs.append(row)
    val = None
    for k in range(K):
        if coeffs[k]:
            val = k
            break
    if val is None:
        raise TruncationInsufficient(f"no nonzero coefficient in the first {K} orders")
    return HSeries(val, coeffs[val : val + K])


def hseries_expand(f, K=8):
    """Expand a RationalQT under q = exp(h), truncated K terms past the valuation."""
    if isinstance(f, LaurentQT):
        f = RationalQT(f)
    num = _laurent_hseries(f.num, K)
    if f.den == _ONE:
        return num
    den = _laurent_hseries(f.den, K)
    return num / den


def hseries_expand_auto(f, K=8, max_K=64):
    """hseries_expand with automatic doubling of K on TruncationInsufficient."""
    while True:
        try:
            return hseries_expand(f, K)
        except TruncationInsufficient:
            if K >= max_K:
                raise
            K = min(2 * K, max_K)


def hseries_valuation(f, K=8, max_K=64):
    """The h-adic valuation of a RationalQT at q = exp(h)."""
    if isinstance(f, LaurentQT):
        f = RationalQT(f)
    if not f.num:
        raise ValueError("the zero function has no valuation")
    K0 = K
    while True:
        try:
            vn = _laurent_hseries(f.num, K0).valuation
            break
        except TruncationInsufficient:
            if K0 >= max_K:
                raise
            K0 = min(2 * K0, max_K)
    K0 = K
    while True:
        try:
            vd = _laurent_hseries(f.den, K0).valuation
            break
        except TruncationInsufficient:
            if K0 >= max_K:
                raise
            K0 = min(2 * K0, max_K)
    return vn - vd
