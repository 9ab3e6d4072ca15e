"""The character ring of the annulus skein.

Everything here lives in Lambda_x (x) Lambda_{x*}, the tensor square of the
ring of symmetric functions, in one of three bases:

* ``composite``   -- composite Schur functions s_{lambda,mu}(x; x*), the
  integral basis matching the annulus eigenvector basis Q_{lambda,mu};
* ``schur_pair``  -- plain tensors s_rho(x) s_nu(x*), the internal canonical
  basis (products and Adams operations reduce to ordinary LR data there);
* ``power_pair``  -- products of power sums P_eta P*_pi, where skein
  evaluation becomes a ring homomorphism.

The basis changes are the alternating Littlewood-Richardson expansions

    s_{lambda,mu} = sum_sigma (-1)^|sigma| c^lambda_{sigma,rho}
                    c^mu_{sigma^t,nu} s_rho (x) s*_nu,
    s_rho (x) s*_nu = sum_eps c^rho_{eps,beta} c^nu_{eps,gamma} s_{beta,gamma},

which are mutually inverse.  Adams operations act on power sums by
p_k -> p_{mk} and are computed on Schur functions through character sums.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .chars import character, lr_coeff, schur_expand_product
from .exactring import RationalQT
from .partitions import EMPTY, Partition, PartitionPair, partitions_of, splittings

COMPOSITE = "composite"
SCHUR_PAIR = "schur_pair"
POWER_PAIR = "power_pair"
BASES = (COMPOSITE, SCHUR_PAIR, POWER_PAIR)


def _add_to(table, key, value):
    cur = table.get(key)
    if cur is None:
        if value:
            table[key] = value
    else:
        cur = cur + value
        if cur:
            table[key] = cur
        else:
            del table[key]


# -- integer basis-change kernels -------------------------------------------------


@lru_cache(maxsize=None)
def composite_to_schurpair_terms(lam, mu):
    """s_{lam,mu} expanded over s_rho (x) s*_nu; integer coefficients."""
    lam, mu = Partition(lam), Partition(mu)
    out = {}
    for s in range(min(lam.size, mu.size) + 1):
        sign = -1 if s % 2 else 1
        for sigma in partitions_of(s):
            sigma_t = sigma.conjugate()
            for rho in partitions_of(lam.size - s):
                c1 = lr_coeff(lam, sigma, rho)
                if not c1:
                    continue
                for nu in partitions_of(mu.size - s):
                    c2 = lr_coeff(mu, sigma_t, nu)
                    if c2:
                        _add_to(out, PartitionPair(rho, nu), sign * c1 * c2)
    return out


@lru_cache(maxsize=None)
def schurpair_to_composite_terms(rho, nu):
    """s_rho (x) s*_nu expanded over composite Schur functions; the inverse map."""
    rho, nu = Partition(rho), Partition(nu)
    out = {}
    for s in range(min(rho.size, nu.size) + 1):
        for eps in partitions_of(s):
            for beta in partitions_of(rho.size - s):
                c1 = lr_coeff(rho, eps, beta)
                if not c1:
                    continue
                for gamma in partitions_of(nu.size - s):
                    c2 = lr_coeff(nu, eps, gamma)
                    if c2:
                        _add_to(out, PartitionPair(beta, gamma), c1 * c2)
    return out


@lru_cache(maxsize=None)
def schur_to_power_terms(lam):
    """Frobenius expansion s_lam = sum_mu chi_lam(mu)/z_mu p_mu."""
    lam = Partition(lam)
    out = {}
    for mu in partitions_of(lam.size):
        chi = character(lam, mu)
        if chi:
            out[mu] = Fraction(chi, mu.z)
    return out


@lru_cache(maxsize=None)
def power_to_schur_terms(eta):
    """Inverse Frobenius: p_eta = sum_lam chi_lam(eta) s_lam."""
    eta = Partition(eta)
    out = {}
    for lam in partitions_of(eta.size):
        chi = character(lam, eta)
        if chi:
            out[lam] = chi
    return out


@lru_cache(maxsize=None)
def schurpair_mult(p1, p2):
    """(s_a (x) s*_b) * (s_c (x) s*_d): leg-wise LR products, integer table."""
    out = {}
    left = schur_expand_product(p1.pos, p2.pos)
    right = schur_expand_product(p1.neg, p2.neg)
    for A, c1 in left.items():
        for B, c2 in right.items():
            _add_to(out, PartitionPair(A, B), c1 * c2)
    return out


@lru_cache(maxsize=None)
def composite_product_terms(p1, p2):
    """Structure constants of the composite basis, through the schur_pair route."""
    acc = {}
    t1 = composite_to_schurpair_terms(p1.pos, p1.neg)
    t2 = composite_to_schurpair_terms(p2.pos, p2.neg)
    for a, c1 in t1.items():
        for b, c2 in t2.items():
            for pair, c3 in schurpair_mult(a, b).items():
                _add_to(acc, pair, c1 * c2 * c3)
    out = {}
    for pair, c in acc.items():
        for target, k in schurpair_to_composite_terms(pair.pos, pair.neg).items():
            _add_to(out, target, c * k)
    return out


def product_structure_constant(p1, p2, target):
    """One structure constant through the direct quadruple-LR sum.

    This is the independent route against which composite_product_terms is
    validated:

        M = sum over beta,gamma,theta,delta of
            (sum_sigma c^xi_{sigma,beta} c^nu_{sigma,gamma})
            (sum_eps   c^eta_{eps,theta} c^rho_{eps,delta})
            c^lam_{beta,delta} c^mu_{gamma,theta}

    for [xi, eta] * [rho, nu] -> [lam, mu].
    """
    xi, eta = p1
    rho, nu = p2
    lam, mu = target
    total = 0
    for sb in range(min(xi.size, nu.size) + 1):
        for beta in partitions_of(xi.size - sb):
            for gamma in partitions_of(nu.size - sb):
                inner1 = sum(
                    lr_coeff(xi, sigma, beta) * lr_coeff(nu, sigma, gamma)
                    for sigma in partitions_of(sb)
                )
                if not inner1:
                    continue
                for se in range(min(eta.size, rho.size) + 1):
                    for theta in partitions_of(eta.size - se):
                        c_mu = lr_coeff(mu, gamma, theta)
                        if not c_mu:
                            continue
                        for delta in partitions_of(rho.size - se):
                            c_lam = lr_coeff(lam, beta, delta)
                            if not c_lam:
                                continue
                            inner2 = sum(
                                lr_coeff(eta, eps, theta) * lr_coeff(rho, eps, delta)
                                for eps in partitions_of(se)
                            )
                            total += inner1 * inner2 * c_lam * c_mu
    return total


# -- Adams operations ----------------------------------------------------------------


@lru_cache(maxsize=None)
def adams_schur(lam, m):
    """Adams operation on a Schur function: integer table over partitions of m|lam|.

    C^rho = sum_{mu of |lam|} chi_lam(mu) chi_rho(m mu) / z_mu.
    """
    lam = Partition(lam)
    if m < 1:
        raise ValueError("the Adams index must be >= 1")
    if m == 1:
        return {lam: 1}
    acc = {}
    for mu, coeff in schur_to_power_terms(lam).items():
        for rho, chi in power_to_schur_terms(mu.scaled(m)).items():
            _add_to(acc, rho, coeff * chi)
    out = {}
    for rho, val in acc.items():
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral Adams coefficient {val}")
        out[rho] = int(val)
    return out


@lru_cache(maxsize=None)
def adams_composite(pair, m):
    """Adams operation on a composite basis element, as an integer table.

    Computed by pushing through the schur_pair basis: expand, apply the Adams
    table to each tensor leg, re-expand in the composite basis.
    """
    if m == 1:
        return {pair: 1}
    acc = {}
    for sp, c in composite_to_schurpair_terms(pair.pos, pair.neg).items():
        left = adams_schur(sp.pos, m)
        right = adams_schur(sp.neg, m)
        for d, c1 in left.items():
            for th, c2 in right.items():
                _add_to(acc, PartitionPair(d, th), c * c1 * c2)
    out = {}
    for sp, c in acc.items():
        for target, k in schurpair_to_composite_terms(sp.pos, sp.neg).items():
            _add_to(out, target, c * k)
    return out


# -- the SymFunc container --------------------------------------------------------------


class SymFunc:
    """A finite linear combination over one of the three bases.

    Term keys are PartitionPair; coefficients are RationalQT (integers for
    most structural elements, scalars of the coefficient ring after twists).
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        data = {}
        if terms:
            for pair, coeff in terms.items():
                if isinstance(coeff, (int, Fraction)):
                    coeff = (
                        RationalQT(coeff)
                        if isinstance(coeff, int)
                        else RationalQT.from_fraction(coeff)
                    )
                if coeff:
                    key = PartitionPair(Partition(pair[0]), Partition(pair[1]))
                    if key in data:
                        coeff = data[key] + coeff
                    if coeff:
                        data[key] = coeff
                    else:
                        del data[key]
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, *a):
        raise AttributeError("SymFunc is immutable")

    # -- constructors ------------------------------------------------------------

    @classmethod
    def zero(cls, basis=COMPOSITE):
        return cls(basis)

    @classmethod
    def one(cls, basis=COMPOSITE):
        return cls(basis, {PartitionPair(EMPTY, EMPTY): 1})

    @classmethod
    def composite(cls, lam, mu=()):
        return cls(COMPOSITE, {PartitionPair(Partition(lam), Partition(mu)): 1})

    @classmethod
    def schur_pair(cls, rho, nu=()):
        return cls(SCHUR_PAIR, {PartitionPair(Partition(rho), Partition(nu)): 1})

    @classmethod
    def power_pair(cls, eta, pi=()):
        return cls(POWER_PAIR, {PartitionPair(Partition(eta), Partition(pi)): 1})

    # -- linear structure -----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to_basis(self.basis)
        data = dict(self.terms)
        for pair, c in other.terms.items():
            cur = data.get(pair)
            c2 = c if cur is None else cur + c
            if c2:
                data[pair] = c2
            else:
                data.pop(pair, None)
        return SymFunc(self.basis, data)

    def __neg__(self):
        return SymFunc(self.basis, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        scalar = RationalQT._coerce(scalar)
        if not scalar:
            return SymFunc(self.basis)
        return SymFunc(self.basis, {p: c * scalar for p, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to_basis(self.basis)
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    # -- basis changes ------------------------------------------------------------------

    def to_basis(self, basis):
        if basis == self.basis:
            return self
        route = {
            (COMPOSITE, SCHUR_PAIR): composite_to_schurpair_terms,
            (SCHUR_PAIR, COMPOSITE): schurpair_to_composite_terms,
        }
        if (self.basis, basis) in route:
            kernel = route[(self.basis, basis)]
            out = {}
            for pair, coeff in self.terms.items():
                for target, k in kernel(pair.pos, pair.neg).items():
                    _add_to(out, target, coeff * k)
            return SymFunc(basis, out)
        if self.basis == SCHUR_PAIR and basis == POWER_PAIR:
            out = {}
            for pair, coeff in self.terms.items():
                for eta, a in schur_to_power_terms(pair.pos).items():
                    for pi, b in schur_to_power_terms(pair.neg).items():
                        _add_to(out, PartitionPair(eta, pi), coeff * (a * b))
            return SymFunc(POWER_PAIR, out)
        if self.basis == POWER_PAIR and basis == SCHUR_PAIR:
            out = {}
            for pair, coeff in self.terms.items():
                for lam, a in power_to_schur_terms(pair.pos).items():
                    for nu, b in power_to_schur_terms(pair.neg).items():
                        _add_to(out, PartitionPair(lam, nu), coeff * (a * b))
            return SymFunc(SCHUR_PAIR, out)
        # two-step routes through schur_pair
        return self.to_basis(SCHUR_PAIR).to_basis(basis)

    # -- multiplication --------------------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to_basis(self.basis)
        out = {}
        if self.basis == POWER_PAIR:
            for p1, c1 in self.terms.items():
                for p2, c2 in other.terms.items():
                    key = PartitionPair(p1.pos.union(p2.pos), p1.neg.union(p2.neg))
                    _add_to(out, key, c1 * c2)
            return SymFunc(POWER_PAIR, out)
        kernel = schurpair_mult if self.basis == SCHUR_PAIR else composite_product_terms
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                c = c1 * c2
                for pair, k in kernel(p1, p2).items():
                    _add_to(out, pair, c * k)
        return SymFunc(self.basis, out)

    # -- symmetries ---------------------------------------------------------------------------

    def swapped(self):
        """Exchange the two orientations on every index pair."""
        return SymFunc(self.basis, {p.swap(): c for p, c in self.terms.items()})

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [
                {"pos": list(p.pos), "neg": list(p.neg), "coeff": c.to_json()}
                for p, c in sorted(self.terms.items())
            ],
        }

    def __repr__(self):
        if not self.terms:
            return f"SymFunc({self.basis}, 0)"
        bits = ", ".join(f"{p.text()}: {c!r}" for p, c in sorted(self.terms.items()))
        return f"SymFunc({self.basis}, {{{bits}}})"


# -- spec-level operation wrappers ---------------------------------------------------------------


def composite_to_schurpair(lam, mu):
    """The composite Schur element s_{lam,mu} as a schur_pair combination."""
    terms = composite_to_schurpair_terms(Partition(lam), Partition(mu))
    return SymFunc(SCHUR_PAIR, dict(terms))


def schurpair_to_composite(rho, nu):
    """The plain tensor s_rho (x) s*_nu as a composite combination."""
    terms = schurpair_to_composite_terms(Partition(rho), Partition(nu))
    return SymFunc(COMPOSITE, dict(terms))


def composite_product(p1, p2):
    """Product of two composite basis elements, in the composite basis."""
    p1 = PartitionPair(Partition(p1[0]), Partition(p1[1]))
    p2 = PartitionPair(Partition(p2[0]), Partition(p2[1]))
    return SymFunc(COMPOSITE, dict(composite_product_terms(p1, p2)))


# -- the determinantal construction --------------------------------------------------------------


def q_matrix(lam, mu):
    """The (l+r) x (l+r) matrix of h / h* entries whose determinant is s_{lam,mu}.

    Entries are ('h', k) or ('h*', k); index 0 means the unit and negative
    indices mean zero.  The h*-block sits on top with the parts of mu running
    up the diagonal in reverse order; the h-block follows with the parts of
    lam in order.
    """
    lam, mu = Partition(lam), Partition(mu)
    l, r = len(lam), len(mu)
    size = l + r
    rows = []
    for i in range(1, r + 1):  # h*-rows: diagonal entry mu_{r-i+1}
        part = mu[r - i]
        rows.append([("h*", part + i - j) for j in range(1, size + 1)])
    for a in range(1, l + 1):  # h-rows: diagonal entry lam_a
        part = lam[a - 1]
        rows.append([("h", part + j - r - a) for j in range(1, size + 1)])
    return rows


def _det_monomials(rows, cols, matrix):
    """Cofactor expansion into {(h-index multiset, h*-index multiset): int}."""
    if not rows:
        return {((), ()): 1}
    r0 = rows[0]
    out = {}
    for pos, j in enumerate(cols):
        kind, idx = matrix[r0][j]
        if idx < 0:
            continue
        sub = _det_monomials(rows[1:], cols[:pos] + cols[pos + 1 :], matrix)
        sign = -1 if pos % 2 else 1
        for (hs, hstars), c in sub.items():
            if idx > 0:
                key = (
                    (tuple(sorted(hs + (idx,))), hstars)
                    if kind == "h"
                    else (hs, tuple(sorted(hstars + (idx,))))
                )
            else:
                key = (hs, hstars)
            _add_to(out, key, sign * c)
    return out


@lru_cache(maxsize=None)
def _h_monomial_schur(indices):
    """prod_i h_{m_i} expanded in the Schur basis (h_m = s_(m))."""
    acc = {EMPTY: 1}
    for m in indices:
        nxt = {}
        for lam, c in acc.items():
            for target, k in schur_expand_product(lam, Partition([m])).items():
                _add_to(nxt, target, c * k)
        acc = nxt
    return acc


def q_determinant(lam, mu):
    """Expand the determinantal matrix for (lam, mu); must equal s_{lam,mu}."""
    lam, mu = Partition(lam), Partition(mu)
    matrix = q_matrix(lam, mu)
    size = len(matrix)
    monos = _det_monomials(tuple(range(size)), tuple(range(size)), matrix)
    out = {}
    for (hs, hstars), c in monos.items():
        left = _h_monomial_schur(hs)
        right = _h_monomial_schur(hstars)
        for a, c1 in left.items():
            for b, c2 in right.items():
                _add_to(out, PartitionPair(a, b), c * c1 * c2)
    return SymFunc(SCHUR_PAIR, out).to_basis(COMPOSITE)


# -- the orientation-symmetrised power-sum element ------------------------------------------------


def _r_nu_character_route(nu):
    """sum_A chi_A(nu) sum_{lam,mu} c^A_{lam,mu} s_{lam,mu}, pushed to power sums."""
    nu = Partition(nu)
    composite = {}
    for A in partitions_of(nu.size):
        chi = character(A, nu)
        if not chi:
            continue
        for k in range(nu.size + 1):
            for lam in partitions_of(k):
                for m in partitions_of(nu.size - k):
                    c = lr_coeff(A, lam, m)
                    if c:
                        _add_to(composite, PartitionPair(lam, m), chi * c)
    return SymFunc(COMPOSITE, composite).to_basis(POWER_PAIR)


def _r_nu_splitting_route(nu):
    """The splitting expansion over P_eta P*_pi with z-ratio weights.

    First block: all splittings nu = B u C contribute z_nu/(z_B z_C) P_B P*_C.
    Second block: distinct triples (tau, eta, pi) with tau nonempty and
    nu = tau u tau u eta u pi contribute (-1)^{l(tau)} z_nu/(z_eta z_tau z_pi).
    """
    nu = Partition(nu)
    out = {}
    for B, C in splittings(nu):
        _add_to(out, PartitionPair(B, C), Fraction(nu.z, B.z * C.z))
    # enumerate tau with tau u tau contained in nu
    mult = nu.multiplicities()
    values = sorted(mult)
    choices = [[(v, i) for i in range(mult[v] // 2 + 1)] for v in values]

    def rec(idx, tau_parts):
        if idx == len(choices):
            tau = Partition(tau_parts)
            if not tau:
                return
            rest = list(nu)
            for p in tau_parts + tau_parts:
                rest.remove(p)
            rest = Partition(rest)
            sign = -1 if len(tau) % 2 else 1
            for eta, pi in splittings(rest):
                w = Fraction(nu.z, eta.z * tau.z * pi.z)
                _add_to(out, PartitionPair(eta, pi), sign * w)
            return
        for v, i in choices[idx]:
            rec(idx + 1, tau_parts + [v] * i)

    rec(0, [])
    terms = {}
    for pair, w in out.items():
        if w.denominator != 1:
            raise ArithmeticError(f"non-integral splitting weight {w}")
        terms[pair] = int(w)
    return SymFunc(POWER_PAIR, terms)


def r_nu(nu, check=True):
    """The skein element attached to nu, in the power_pair basis.

    With ``check`` the two independent computations (character sum and
    splitting expansion) are both evaluated and must agree.
    """
    result = _r_nu_splitting_route(nu)
    if check:
        other = _r_nu_character_route(nu)
        if result != other:
            raise ArithmeticError(f"splitting and character routes differ for {nu}")
    return result
