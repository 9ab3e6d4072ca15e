"""Composite invariants and their reformulated, integrality-carrying versions.

The composite invariant attaches one partition per component and sums full
colored invariants against products of Littlewood-Richardson coefficients:

    H_A(L) = sum over (lam^a, mu^a) of prod_a c^{A^a}_{lam^a, mu^a}
             W_{[lam^1,mu^1],...,[lam^L,mu^L]}(L).

The reformulated invariants decorate with power sums instead of eigenvectors:

    Z_mu(L)  = bracket of L decorated with P_{mu^a}, starred on reversed
               components;
    Zh_mu(L) = [mu] * Z_mu(L),   [mu] = prod_a prod_i (q**m_i - q**-m_i);
    Rh_p(L)  = sum of Zh_p over all 2**L orientation-reversal subsets.

Zh lands in ZZ[z^2, t^{+-1}] with z = q - 1/q, and Rh in 2 ZZ[z^2, t^{+-1}];
``integrality_2z`` produces the verdict together with the integer certificate
table.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product as iproduct

from .chars import character, lr_coeff
from .exactring import LaurentQT, RationalQT, q_bracket, zsquare_decompose
from .partitions import Partition, PartitionPair, partitions_of
from .skein import LabelCountMismatch, full_invariant_value, torus_framed
from .symfun import COMPOSITE, SymFunc


@lru_cache(maxsize=None)
def _pair_weights(A):
    """{(lam, mu): c^A_{lam,mu}} over all pairs splitting the label A."""
    A = Partition(A)
    out = {}
    for k in range(A.size + 1):
        for lam in partitions_of(k):
            for mu in partitions_of(A.size - k):
                c = lr_coeff(A, lam, mu)
                if c:
                    out[PartitionPair(lam, mu)] = c
    return out


def _label_assignments(labels):
    """Iterate (pairs, weight) over LR-weighted pair choices per component."""
    tables = [list(_pair_weights(Partition(A)).items()) for A in labels]
    for combo in iproduct(*tables):
        pairs = tuple(p for p, _ in combo)
        weight = 1
        for _, c in combo:
            weight *= c
        yield pairs, weight


def composite_invariant(spec, labels):
    """H_A for the framing-independent full colored invariants."""
    if len(labels) != spec.L:
        raise LabelCountMismatch(f"{len(labels)} labels for {spec.L} components")
    total = RationalQT(0)
    for pairs, weight in _label_assignments(labels):
        total = total + full_invariant_value(spec, pairs) * weight
    return total.reduced()


def framed_composite(spec, labels):
    """The same LR-weighted sum applied to the framed bracket (no writhe correction)."""
    if len(labels) != spec.L:
        raise LabelCountMismatch(f"{len(labels)} labels for {spec.L} components")
    decorations = []
    for A in labels:
        terms = {pair: c for pair, c in _pair_weights(Partition(A)).items()}
        decorations.append(SymFunc(COMPOSITE, terms))
    return torus_framed(spec, decorations)


# -- reformulated invariants -------------------------------------------------------


@lru_cache(maxsize=None)
def power_decoration(mu):
    """P_mu in the composite basis: sum over A of chi_A(mu) Q_{A, empty}."""
    mu = Partition(mu)
    terms = {}
    for A in partitions_of(mu.size):
        chi = character(A, mu)
        if chi:
            terms[PartitionPair(A, Partition())] = chi
    return SymFunc(COMPOSITE, terms)


def bracket_norm(labels):
    """[mu] = prod over components and parts of q**m - q**-m."""
    out = LaurentQT.one()
    for mu in labels:
        for p in Partition(mu):
            out = out * q_bracket(p)
    return out


def z_reform(spec, labels):
    """Zh: the power-sum-decorated bracket rescaled by the bracket norm.

    Reversed components receive the starred power sums; that is exactly the
    label-swap the bracket machinery applies.
    """
    if len(labels) != spec.L:
        raise LabelCountMismatch(f"{len(labels)} labels for {spec.L} components")
    decorations = [power_decoration(Partition(mu)) for mu in labels]
    raw = torus_framed(spec, decorations)
    return (RationalQT(bracket_norm(labels)) * raw).reduced()


def r_reform(spec, p):
    """Rh_p: the sum of Zh_p over all orientation-reversal subsets.

    For a knot this is 2 Zh_p.  The base spec must not itself carry reversed
    components; reversal bookkeeping happens here.
    """
    if spec.reversed_:
        raise ValueError("r_reform expects an unreversed base spec")
    if p < 1:
        raise ValueError("p must be >= 1")
    labels = tuple(Partition([p]) for _ in range(spec.L))
    total = RationalQT(0)
    for k in range(spec.L + 1):
        for subset in combinations(range(spec.L), k):
            total = total + z_reform(spec.with_reversed(subset), labels)
    return total.reduced()


# -- integrality verdicts --------------------------------------------------------------


def zsquare_member(f):
    """(verdict, stage, table) for membership of f in ZZ[z^2, t^{+-1}]."""
    if isinstance(f, LaurentQT):
        lau = f
    else:
        lau = f.as_laurent()
        if lau is None:
            return False, "not-laurent", None
    table = zsquare_decompose(lau, allowed_pole=0)
    if table is None:
        return False, "not-zsquare", None
    return True, None, table


def integrality_2z(f):
    """(verdict, stage, table) for membership in 2 ZZ[z^2, t^{+-1}].

    Reduces to a Laurent polynomial, halves it, and decomposes in powers of
    z**2; the certificate is the integer coefficient table of f/2.
    """
    if isinstance(f, LaurentQT):
        lau = f
    else:
        lau = f.as_laurent()
        if lau is None:
            return False, "not-laurent", None
    from .exactring import exact_div

    half = exact_div(lau, LaurentQT.from_int(2))
    if half is None:
        return False, "not-even", None
    table = zsquare_decompose(half, allowed_pole=0)
    if table is None:
        return False, "not-zsquare", None
    return True, None, table
