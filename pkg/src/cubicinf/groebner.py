"""Buchberger's algorithm, quotient dimensions and elimination.

The ideals met in this package are tiny (a handful of generators of degree
<= 3 in <= 4 variables), so a plain Buchberger with the normal selection
strategy and the two classical criteria is plenty.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .poly import Poly, grevlex_key

INFINITE = math.inf


@dataclass(frozen=True)
class MonomialOrder:
    kind: str
    key: Callable
    nelim: int = 0

    def __repr__(self):
        return f"MonomialOrder({self.kind}{'' if not self.nelim else f', nelim={self.nelim}'})"


def _lex_key(m):
    return tuple(m)


GREVLEX = MonomialOrder("grevlex", grevlex_key)
LEX = MonomialOrder("lex", _lex_key)


def block_order(nelim: int) -> MonomialOrder:
    """Product of two grevlex orders; eliminates the first ``nelim`` variables."""

    def key(m):
        return (grevlex_key(m[:nelim]), grevlex_key(m[nelim:]))

    return MonomialOrder("block", key, nelim)


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def leading(p: Poly, order: MonomialOrder):
    m = max(p.terms, key=order.key)
    return m, p.terms[m]


def _lead(terms: dict, order):
    m = max(terms, key=order.key)
    return m, terms[m]


def _monic(terms: dict, order) -> dict:
    _, c = _lead(terms, order)
    return {m: v / c for m, v in terms.items()}


def _reduce(terms: dict, basis, order, full=True) -> dict:
    """Remainder of ``terms`` on division by ``basis`` (list of monic dicts)."""
    leads = [_lead(g, order)[0] for g in basis]
    work = dict(terms)
    rem = {}
    while work:
        m = max(work, key=order.key)
        c = work[m]
        for g, lm in zip(basis, leads):
            if mono_divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                for mm, cc in g.items():
                    t = tuple(a + b for a, b in zip(mm, shift))
                    v = work.get(t, 0) - c * cc
                    if v == 0:
                        work.pop(t, None)
                    else:
                        work[t] = v
                break
        else:
            if not full:
                rem.update(work)
                return rem
            rem[m] = c
            del work[m]
    return rem


def _spoly(f: dict, g: dict, order) -> dict:
    lf, _ = _lead(f, order)
    lg, _ = _lead(g, order)
    lcm = mono_lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = {}
    for m, c in f.items():
        t = tuple(a + b for a, b in zip(m, sf))
        out[t] = out.get(t, 0) + c
    for m, c in g.items():
        t = tuple(a + b for a, b in zip(m, sg))
        out[t] = out.get(t, 0) - c
    return {m: c for m, c in out.items() if c != 0}


def spoly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    return Poly(_spoly(_monic(f.terms, order), _monic(g.terms, order), order), f.gens)


def reduce_full(p: Poly, basis, order: MonomialOrder) -> Poly:
    monic = [_monic(g.terms, order) for g in basis if g]
    return Poly(_reduce(p.terms, monic, order), p.gens)


def groebner(generators, order: MonomialOrder = GREVLEX):
    """Reduced Groebner basis, monic, sorted by ascending leading monomial."""
    generators = [g for g in generators if g]
    if not generators:
        return []
    gens = generators[0].gens
    for g in generators:
        if g.gens != gens:
            raise ValueError("generators live in different contexts")
    G = []
    for g in generators:
        r = _reduce(g.terms, G, order) if G else dict(g.terms)
        if r:
            G.append(_monic(r, order))
    leads = [_lead(g, order)[0] for g in G]
    pairs = set(combinations(range(len(G)), 2))

    def pair_key(p):
        i, j = p
        return (order.key(mono_lcm(leads[i], leads[j])), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = mono_lcm(li, lj)
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(leads[k], lcm):
                if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                    skip = True
                    break
        if skip:
            continue
        r = _reduce(_spoly(G[i], G[j], order), G, order)
        if r:
            r = _monic(r, order)
            G.append(r)
            leads.append(_lead(r, order)[0])
            n = len(G) - 1
            pairs.update((k, n) for k in range(n))
    # minimalize
    keep = []
    for i, lm in enumerate(leads):
        dominated = False
        for j, lj in enumerate(leads):
            if j == i:
                continue
            if mono_divides(lj, lm) and (lj != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(G[i])
    # interreduce
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = _reduce(g, others, order) if others else g
        reduced.append(_monic(r, order))
    reduced.sort(key=lambda g: order.key(_lead(g, order)[0]))
    return [Poly(g, gens) for g in reduced]


def is_groebner(basis, order: MonomialOrder = GREVLEX) -> bool:
    """Buchberger criterion: all S-polynomials reduce to zero."""
    monic = [_monic(g.terms, order) for g in basis if g]
    for f, g in combinations(monic, 2):
        if _reduce(_spoly(f, g, order), monic, order):
            return False
    return True


def leading_monomials(basis, order: MonomialOrder = GREVLEX):
    return [leading(g, order)[0] for g in basis]


def krull_dimension(basis, order: MonomialOrder = GREVLEX) -> int:
    """Dimension of the affine variety of the ideal; -1 for the unit ideal."""
    if not basis:
        raise ValueError("zero ideal: dimension is the number of variables")
    nv = basis[0].nvars
    lms = leading_monomials(basis, order)
    if any(sum(m) == 0 for m in lms):
        return -1
    best = 0
    for size in range(nv, 0, -1):
        for subset in combinations(range(nv), size):
            s = set(subset)
            if all(any(e and i not in s for i, e in enumerate(m)) for m in lms):
                return size
    return best


def ideal_dimension(generators, nvars: int | None = None) -> int:
    gb = groebner(generators, GREVLEX)
    if not gb:
        return nvars if nvars is not None else generators[0].nvars
    return krull_dimension(gb, GREVLEX)


def standard_monomials(lms, nvars: int, limit: int = 100000):
    """Monomials outside the leading-term ideal; None when infinitely many."""
    if any(sum(m) == 0 for m in lms):
        return []
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            return None
    seen = set()
    frontier = [(0,) * nvars]
    while frontier:
        m = frontier.pop()
        if m in seen or any(mono_divides(l, m) for l in lms):
            continue
        seen.add(m)
        if len(seen) > limit:
            raise RuntimeError("staircase too large")
        for i in range(nvars):
            mm = list(m)
            mm[i] += 1
            frontier.append(tuple(mm))
    return sorted(seen, key=grevlex_key)


def quotient_dim(generators, gens=None):
    """dim_Q Q[x]/I as a count of standard monomials; INFINITE if unbounded."""
    generators = [g for g in generators if g]
    if not generators:
        return INFINITE
    gb = groebner(generators, GREVLEX)
    lms = leading_monomials(gb, GREVLEX)
    std = standard_monomials(lms, gb[0].nvars)
    if std is None:
        return INFINITE
    return len(std)


def eliminate(generators, keep):
    """Generators of I ∩ Q[keep]; ``keep`` must be a suffix of the variable order."""
    generators = [g for g in generators if g]
    if not generators:
        return []
    gens = generators[0].gens
    keep = tuple(keep)
    if gens[len(gens) - len(keep):] != keep:
        raise ValueError("kept variables must form a suffix block")
    nelim = len(gens) - len(keep)
    gb = groebner(generators, block_order(nelim))
    out = []
    for g in gb:
        if all(not any(m[:nelim]) for m in g.terms):
            out.append(g.to_gens(keep))
    return out
