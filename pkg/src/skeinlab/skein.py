"""Skein-theoretic evaluation for torus links and framed unknots.

The engine evaluates decorated links of two families:

* ``TorusLink(m, n, L)`` -- the L-component torus link whose components are
  (m, n)-curves, gcd(m, n) = 1, carried by the framed cabling map: decorate
  each component, apply the m-th Adams operation, multiply in the annulus
  algebra, apply the fractional twist tau**(n/m), and close off in the plane.
  The natural surface framing contributes writhe m*n per component; the
  ``framing`` vector counts extra kinks on top of that.
* ``FramedUnknot(f)`` -- an unknot with f kinks.

Evaluation in the plane is the ring homomorphism sending the power sums
P_m and P*_m to (t**m - t**-m)/(q**m - q**-m), fixed by the one-crossing
closures A_{i,j} evaluating to t**(i-j) times the unknot scalar.  A kink
multiplies an eigenvector-decorated component by the framing factor
tau = q**(kappa_lam + kappa_mu) * t**(|lam| + |mu|).

Orientation-reversed components are handled by the involution that swaps the
two rows of the decoration label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactring import LaurentQT, RationalQT, q_bracket, t_bracket, _exp
from .partitions import Partition, PartitionPair
from .symfun import (
    COMPOSITE,
    POWER_PAIR,
    composite_to_schurpair_terms,
    schurpair_mult,
    schurpair_to_composite_terms,
)

TORUS = "torus"
UNKNOT = "unknot"


class LabelCountMismatch(ValueError):
    """The number of labels does not match the number of link components."""


@dataclass(frozen=True)
class LinkSpec:
    """A torus link T with per-component framing, or a framed unknot.

    For the torus family the underlying link is the (mL, nL) torus link with
    gcd(m, n) = 1; ``framing[a]`` counts kinks added to component ``a`` beyond
    the surface framing, so the component writhe is m*n + framing[a].  The
    standard planar diagram of T(mL, nL) corresponds to framing -n on every
    component (writhe n(m-1) per component, 0 for the L >= 2 links with
    m = 1).
    """

    family: str
    m: int = 0
    n: int = 0
    L: int = 1
    framing: tuple = ()
    reversed_: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.family not in (TORUS, UNKNOT):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == TORUS:
            if self.L < 1 or self.m < 1:
                raise ValueError("need m >= 1 and L >= 1")
            if gcd(self.m, abs(self.n)) != 1:
                raise ValueError(f"gcd({self.m}, {self.n}) != 1")
        else:
            if self.L != 1:
                raise ValueError("a framed unknot has one component")
        if len(self.framing) != self.L:
            raise ValueError("framing vector length must equal L")
        if not set(self.reversed_) <= set(range(self.L)):
            raise ValueError("reversed component indices out of range")

    # -- constructors ------------------------------------------------------------

    @classmethod
    def torus(cls, m, n, L, framing=None, reversed_=()):
        if framing is None:
            framing = (0,) * L
        elif isinstance(framing, int):
            framing = (framing,) * L
        else:
            framing = tuple(framing)
        return cls(TORUS, m, n, L, framing, frozenset(reversed_))

    @classmethod
    def unknot(cls, framing=0, reversed_=()):
        return cls(UNKNOT, 0, 0, 1, (framing,), frozenset(reversed_))

    @classmethod
    def torus_diagram(cls, a, b, reversed_=()):
        """The standard (blackboard-framed) diagram of the (a, b) torus link."""
        L = gcd(a, b)
        if L < 1:
            raise ValueError("need a >= 1")
        m, n = a // L, b // L
        return cls.torus(m, n, L, framing=(-n,) * L, reversed_=reversed_)

    # -- derived data --------------------------------------------------------------

    @property
    def writhes(self):
        """Per-component self-writhe of the evaluated diagram."""
        if self.family == UNKNOT:
            return self.framing
        return tuple(self.m * self.n + f for f in self.framing)

    def with_reversed(self, indices):
        return LinkSpec(self.family, self.m, self.n, self.L, self.framing, frozenset(indices))

    def with_framing(self, framing):
        framing = (framing,) * self.L if isinstance(framing, int) else tuple(framing)
        return LinkSpec(self.family, self.m, self.n, self.L, framing, self.reversed_)

    def describe(self):
        if self.family == UNKNOT:
            base = f"U({self.framing[0]})"
        else:
            base = f"T[{self.m},{self.n},{self.L}]{list(self.framing)}"
        if self.reversed_:
            base += f"*rev{sorted(self.reversed_)}"
        return base

    def to_json(self):
        return {
            "family": self.family,
            "m": self.m,
            "n": self.n,
            "L": self.L,
            "framing": list(self.framing),
            "reversed": sorted(self.reversed_),
        }


@dataclass(frozen=True)
class InvariantResult:
    """A computed invariant with its labels; ``normalized`` marks writhe-corrected values."""

    value: RationalQT
    normalized: bool
    labels: tuple

    def to_json(self):
        return {
            "value": self.value.to_json(),
            "normalized": self.normalized,
            "labels": [[list(p.pos), list(p.neg)] for p in self.labels],
        }


# -- evaluation in the plane ---------------------------------------------------------


@lru_cache(maxsize=None)
def power_value(m):
    """The unknot decorated by P_m: (t**m - t**-m)/(q**m - q**-m)."""
    return RationalQT(t_bracket(m), q_bracket(m))


def evaluate(f):
    """The plane evaluation: a ring homomorphism on the power-sum basis."""
    f = f.to_basis(POWER_PAIR)
    total = RationalQT(0)
    for pair, coeff in f.terms.items():
        val = coeff
        for p in pair.pos:
            val = val * power_value(p)
        for p in pair.neg:
            val = val * power_value(p)
        total = total + val
    return total.reduced()


@lru_cache(maxsize=None)
def _schur_unknot(lam):
    """Colored unknot value for a one-row-family label, via the Frobenius expansion."""
    from .symfun import schur_to_power_terms

    pieces = []
    for mu, coeff in schur_to_power_terms(lam).items():
        val = RationalQT.from_fraction(coeff)
        for p in mu:
            val = val * power_value(p)
        pieces.append(val)
    return RationalQT.sum(pieces).reduced()


@lru_cache(maxsize=None)
def unknot_full(lam, mu=()):
    """Full colored unknot invariant for the composite label [lam, mu].

    Equals the alternating LR combination of products of one-sided colored
    unknot values, which is also the plane evaluation of the composite basis
    element (the two agree; see the selftest suite).
    """
    lam, mu = Partition(lam), Partition(mu)
    pieces = []
    for pair, c in composite_to_schurpair_terms(lam, mu).items():
        pieces.append(_schur_unknot(pair.pos) * _schur_unknot(pair.neg) * c)
    return RationalQT.sum(pieces).reduced()


def framing_factor(lam, mu=()):
    """tau_{lam,mu} = q**(kappa_lam + kappa_mu) * t**(|lam| + |mu|)."""
    lam, mu = Partition(lam), Partition(mu)
    return LaurentQT.monomial(1, lam.kappa + mu.kappa, lam.size + mu.size)


def _framing_power(pair, e):
    """tau_{pair}**e for a rational exponent e, as a (possibly fractional) monomial."""
    e = Fraction(e)
    return LaurentQT.monomial(1, _exp(pair.kappa * e), _exp(pair.size * e))


def meridian_eigenvalue(lam, mu=()):
    """Eigenvalue of the meridian map on the composite eigenvector [lam, mu]:

    (q - 1/q) * (t * sum over lam cells of q**(2c) - 1/t * sum over mu cells
    of q**(-2c)) + the unknot scalar, c the cell content.
    """
    lam, mu = Partition(lam), Partition(mu)
    terms = [((2 * c, 1), 1) for c in lam.contents()]
    terms += [((-2 * c, -1), -1) for c in mu.contents()]
    finite = q_bracket(1) * LaurentQT(terms)
    return RationalQT(finite) + power_value(1)


# -- torus-link brackets ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _adams_schurpair(pair, m):
    """Adams operation applied to a composite element, left in the schur_pair basis."""
    out = {}
    for sp, c in composite_to_schurpair_terms(pair.pos, pair.neg).items():
        if m == 1:
            cur = out.get(sp, 0) + c
            if cur:
                out[sp] = cur
            else:
                out.pop(sp, None)
            continue
        from .symfun import adams_schur

        for d, c1 in adams_schur(sp.pos, m).items():
            for th, c2 in adams_schur(sp.neg, m).items():
                key = PartitionPair(d, th)
                cur = out.get(key, 0) + c * c1 * c2
                if cur:
                    out[key] = cur
                else:
                    out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _surface_bracket(m, n, L, pairs):
    """Bracket of the surface-framed torus link decorated by composite labels.

    Applies the m-th Adams operation per component, multiplies the results in
    the annulus algebra, twists every resulting eigenvector by
    tau**(n/m), and evaluates each on the unknot.
    """
    acc = None
    for pair in pairs:
        table = _adams_schurpair(pair, m)
        if acc is None:
            acc = dict(table)
        else:
            nxt = {}
            for p1, c1 in acc.items():
                for p2, c2 in table.items():
                    for target, k in schurpair_mult(p1, p2).items():
                        cur = nxt.get(target, 0) + c1 * c2 * k
                        if cur:
                            nxt[target] = cur
                        else:
                            nxt.pop(target, None)
            acc = nxt
    composite = {}
    for sp, c in acc.items():
        for target, k in schurpair_to_composite_terms(sp.pos, sp.neg).items():
            cur = composite.get(target, 0) + c * k
            if cur:
                composite[target] = cur
            else:
                composite.pop(target, None)
    twist = Fraction(n, m)
    pieces = []
    for pair, c in composite.items():
        mono = _framing_power(pair, twist) * c
        pieces.append(RationalQT(mono) * unknot_full(pair.pos, pair.neg))
    return RationalQT.sum(pieces).reduced()


def _validated_pairs(spec, pairs):
    if len(pairs) != spec.L:
        raise LabelCountMismatch(f"{len(pairs)} labels for {spec.L} components")
    out = []
    for a, pair in enumerate(pairs):
        pair = PartitionPair(Partition(pair[0]), Partition(pair[1]))
        if a in spec.reversed_:
            pair = pair.swap()
        out.append(pair)
    return tuple(out)


def _bracket_basis(spec, pairs):
    """Framed bracket of the spec decorated by composite basis elements.

    ``pairs`` must already be swap-adjusted for reversed components.
    """
    kink = LaurentQT.one()
    for pair, f in zip(pairs, spec.framing):
        kink = kink * _framing_power(pair, f)
    if spec.family == UNKNOT:
        core = unknot_full(pairs[0].pos, pairs[0].neg)
    else:
        core = _surface_bracket(spec.m, spec.n, spec.L, pairs)
    return RationalQT(kink) * core


def torus_framed(spec, decorations):
    """Framed bracket of the link decorated by arbitrary annulus elements.

    Reversed components see the orientation involution (label rows swapped);
    kinks contribute one framing factor each, applied before the cabling map.
    """
    if len(decorations) != spec.L:
        raise LabelCountMismatch(f"{len(decorations)} decorations for {spec.L} components")
    comps = []
    for a, dec in enumerate(decorations):
        dec = dec.to_basis(COMPOSITE)
        if a in spec.reversed_:
            dec = dec.swapped()
        comps.append(list(dec.terms.items()))
    total = RationalQT(0)

    def rec(a, pairs, coeff):
        nonlocal total
        if a == spec.L:
            total = total + coeff * _bracket_basis(spec, tuple(pairs))
            return
        for pair, c in comps[a]:
            rec(a + 1, pairs + [pair], coeff * c)

    rec(0, [], RationalQT(1))
    return total.reduced()


def _t_integral(f):
    return all(isinstance(et, int) for (_, et) in f.terms)


def torus_full_invariant(spec, pairs):
    """The framing-independent full colored invariant with the given labels.

    The writhe correction removes m*n framing factors per component, so the
    result does not depend on the framing vector at all; the final value has
    integer t-exponents (checked).
    """
    labels = _validated_pairs(spec, pairs)
    if spec.family == UNKNOT:
        value = unknot_full(labels[0].pos, labels[0].neg)
    else:
        norm = LaurentQT.one()
        for pair in labels:
            norm = norm * _framing_power(pair, -spec.m * spec.n)
        value = RationalQT(norm) * _surface_bracket(spec.m, spec.n, spec.L, labels)
        value = value.reduced()
    if not (_t_integral(value.num) and _t_integral(value.den)):
        raise ArithmeticError(f"non-integral t-exponent in invariant for {spec.describe()}")
    return InvariantResult(value=value, normalized=True, labels=labels)


def full_invariant_value(spec, pairs):
    """Shorthand: the RationalQT value of torus_full_invariant."""
    return torus_full_invariant(spec, pairs).value
