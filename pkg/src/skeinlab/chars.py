"""Symmetric-group characters and Littlewood-Richardson coefficients.

Characters chi_lambda(C_mu) are computed by the Murnaghan-Nakayama border-strip
recursion on beta-numbers, memoised in a table that can persist to disk (one
JSON file per degree under the directory named by SKEINLAB_CACHE).  A missing
or corrupted cache file is silently recomputed.

Littlewood-Richardson coefficients come in two independent flavours:
tableau enumeration (`lr_coeff`) and the character-sum formula
(`lr_via_chars`); the second serves as an oracle for the first.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, partitions_of

CACHE_ENV = "SKEINLAB_CACHE"
_CACHE_VERSION = 1


class SizeMismatch(ValueError):
    """The two partitions do not have equal size."""


def _beta_numbers(lam):
    """Strictly decreasing first-column hook lengths lam_i + l - i."""
    l = len(lam)
    return [lam[i] + l - 1 - i for i in range(l)]


def _partition_from_beta(beta):
    beta = sorted(beta, reverse=True)
    l = len(beta)
    return Partition(beta[i] - (l - 1 - i) for i in range(l))


class CharacterTable:
    """Memoised table of irreducible symmetric-group character values.

    The memo behaves as a pure cache: concurrent use may duplicate work but
    every stored entry is final, and results do not depend on interleaving.
    """

    def __init__(self, cache_dir=None):
        if cache_dir is None:
            cache_dir = os.environ.get(CACHE_ENV)
        self.cache_dir = cache_dir
        self._memo = {}
        self._loaded = set()
        self._dirty = set()

    # -- public API ------------------------------------------------------------

    def character(self, lam, mu):
        """chi_lambda evaluated on the conjugacy class of cycle type mu."""
        lam, mu = Partition(lam), Partition(mu)
        if lam.size != mu.size:
            raise SizeMismatch(f"|{lam}| = {lam.size} != {mu.size} = |{mu}|")
        self._load_degree(lam.size)
        return self._chi(lam, mu)

    def dimension(self, lam):
        lam = Partition(lam)
        return self.character(lam, Partition([1] * lam.size))

    def _chi(self, lam, mu):
        key = (lam, mu)
        val = self._memo.get(key)
        if val is not None:
            return val
        if not mu:
            return 1 if not lam else 0
        # strip the largest part of mu first: deterministic recursion order
        k, rest = mu[0], Partition(mu[1:])
        beta = _beta_numbers(lam)
        beta_set = set(beta)
        total = 0
        for b in beta:
            nb = b - k
            if nb < 0 or nb in beta_set:
                continue
            height = sum(1 for c in beta if nb < c < b)
            nxt = _partition_from_beta([nb if c == b else c for c in beta])
            term = self._chi(nxt, rest)
            total += -term if height % 2 else term
        self._memo[key] = total
        self._dirty.add(lam.size)
        return total

    # -- persistence -------------------------------------------------------------

    def _path(self, degree):
        return os.path.join(self.cache_dir, f"chars_v{_CACHE_VERSION}_deg{degree}.json")

    def _load_degree(self, degree):
        if self.cache_dir is None or degree in self._loaded:
            return
        self._loaded.add(degree)
        try:
            with open(self._path(degree)) as fh:
                data = json.load(fh)
            if data.get("version") != _CACHE_VERSION or data.get("degree") != degree:
                return
            for lam, mu, val in data["entries"]:
                lam, mu = Partition(lam), Partition(mu)
                if lam.size == mu.size == degree:
                    self._memo[(lam, mu)] = int(val)
        except (OSError, ValueError, KeyError, TypeError):
            pass  # recompute silently

    def persist(self):
        """Write dirty degrees to disk (atomic rename; no-op without a cache dir)."""
        if self.cache_dir is None:
            return
        os.makedirs(self.cache_dir, exist_ok=True)
        for degree in sorted(self._dirty):
            entries = [
                [list(lam), list(mu), val]
                for (lam, mu), val in sorted(self._memo.items())
                if lam.size == degree
            ]
            payload = {"version": _CACHE_VERSION, "degree": degree, "entries": entries}
            fd, tmp = tempfile.mkstemp(dir=self.cache_dir, suffix=".tmp")
            try:
                with os.fdopen(fd, "w") as fh:
                    json.dump(payload, fh)
                os.replace(tmp, self._path(degree))
            except OSError:
                try:
                    os.unlink(tmp)
                except OSError:
                    pass
        self._dirty.clear()

    def clear_disk(self):
        if self.cache_dir is None or not os.path.isdir(self.cache_dir):
            return 0
        n = 0
        for name in os.listdir(self.cache_dir):
            if name.startswith("chars_v") and name.endswith(".json"):
                os.unlink(os.path.join(self.cache_dir, name))
                n += 1
        return n


_default_table = None


def default_table():
    global _default_table
    if _default_table is None:
        _default_table = CharacterTable()
    return _default_table


def set_default_cache_dir(path):
    """Point the process-wide table at a cache directory (CLI --cache-dir)."""
    global _default_table
    table = default_table()
    if table.cache_dir != path:
        fresh = CharacterTable(cache_dir=path)
        fresh._memo.update(table._memo)
        fresh._dirty.update(lam.size for lam, _ in table._memo)
        _default_table = fresh
    return _default_table


def character(lam, mu):
    """chi_lambda(C_mu) from the process-wide table."""
    return default_table().character(lam, mu)


# -- Littlewood-Richardson ---------------------------------------------------------


@lru_cache(maxsize=None)
def lr_coeff(nu, lam, mu):
    """c^nu_{lam, mu} by Littlewood-Richardson tableau enumeration.

    Counts semistandard fillings of the skew shape nu/lam with content mu whose
    reverse reading word is a lattice word.  Zero whenever the sizes do not
    match or lam is not contained in nu.
    """
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    if lam.size + mu.size != nu.size:
        return 0
    if not nu.contains(lam):
        return 0
    if not mu:
        return 1 if nu == lam else 0
    rows = len(nu)
    lam_pad = list(lam) + [0] * (rows - len(lam))
    nvals = len(mu)
    # cells in reverse reading order: top row first, right to left
    cells = []
    for r in range(rows):
        for c in range(nu[r] - 1, lam_pad[r] - 1, -1):
            cells.append((r, c))
    fill = {}
    remaining = list(mu)
    counts = [0] * (nvals + 1)

    def place(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        upper = fill.get((r - 1, c))  # strictly above, already placed
        right = fill.get((r, c + 1))  # to the right, already placed
        lo = (upper + 1) if upper is not None else 1
        hi = right if right is not None else nvals
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue  # lattice condition on the reverse reading word
            fill[(r, c)] = v
            remaining[v - 1] -= 1
            counts[v] += 1
            total += place(idx + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
            del fill[(r, c)]
        return total

    return place(0)


def lr_via_chars(nu, lam, mu, table=None):
    """c^nu_{lam, mu} through the character-sum formula; the independent oracle.

    c^nu_{lam,mu} = sum over rho, tau of
    chi_lam(rho) chi_mu(tau) chi_nu(rho U tau) / (z_rho z_tau).
    """
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    if lam.size + mu.size != nu.size:
        return 0
    table = table or default_table()
    total = Fraction(0)
    for rho in partitions_of(lam.size):
        chi_l = table.character(lam, rho)
        if not chi_l:
            continue
        for tau in partitions_of(mu.size):
            chi_m = table.character(mu, tau)
            if not chi_m:
                continue
            chi_n = table.character(nu, rho.union(tau))
            if not chi_n:
                continue
            total += Fraction(chi_l * chi_m * chi_n, rho.z * tau.z)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral LR value {total} for {nu}, {lam}, {mu}")
    return int(total)


@lru_cache(maxsize=None)
def schur_expand_product(lam, mu):
    """s_lam * s_mu in the Schur basis: {nu: c^nu_{lam,mu}} over nu of the right size."""
    lam, mu = Partition(lam), Partition(mu)
    out = {}
    for nu in partitions_of(lam.size + mu.size):
        c = lr_coeff(nu, lam, mu)
        if c:
            out[nu] = c
    return out
