"""Joins and secants of monomial ideals.

Three independent routes are available:

* ``decomposition``: split both ideals into irreducible components, join the
  components pairwise with the closed formula for irreducible ideals and
  intersect (distributivity of join over intersection).  Works in any
  characteristic.
* ``alexander``: multiply Alexander duals and dualize back.  Characteristic
  zero only.
* ``oracle``: brute force over a finite box.  In characteristic zero a
  monomial is standard for the r-th secant exactly when it factors as a
  product of r standard monomials of I.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidInput, UnsupportedMethod
from .monomial import (
    MonomialIdeal,
    alexander_dual,
    component_ideal,
    intersect_all,
    irreducible_decomposition,
    minimal_components,
    modulo_box,
    power,
    product,
)

METHODS = ("decomposition", "alexander", "oracle")
_ALIASES = {"decomp": "decomposition"}


@dataclass(frozen=True)
class FieldChar:
    p: int = 0

    def __post_init__(self):
        if self.p < 0 or (self.p != 0 and not _is_prime(self.p)):
            raise InvalidInput(f"characteristic must be 0 or a prime, got {self.p}")

    def __str__(self):
        return str(self.p)


def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


def _char(p) -> FieldChar:
    return p if isinstance(p, FieldChar) else FieldChar(int(p))


@dataclass(frozen=True)
class JoinResult:
    ideal: MonomialIdeal
    method: str
    char: FieldChar
    degree_bound: Optional[int] = None
    truncated: bool = False


def char_divides_binomial(k: int, l: int, p) -> bool:
    """Whether char(K) = p divides binomial(k, l), by Lucas' theorem on base-p digits."""
    p = _char(p).p
    if not 0 <= l <= k:
        raise InvalidInput("need 0 <= l <= k")
    if p == 0:
        return False
    while k or l:
        if l % p > k % p:
            return True
        k //= p
        l //= p
    return False


def _join_exponent(u: int, v: int, p: int) -> int:
    if u == 0 or v == 0:
        return 0
    if p == 0:
        return u + v - 1
    # w = u + v - 1 always satisfies the condition (the range of l is empty)
    for w in range(max(u, v), u + v):
        if all(char_divides_binomial(w, l, p) for l in range(w - u + 1, v)):
            return w
    return u + v - 1


def join_irreducible(u: Sequence[int], v: Sequence[int], p=0) -> tuple:
    """Exponent vector w with m^u * m^v = m^w."""
    if len(u) != len(v):
        raise InvalidInput("components live in different contexts")
    p = _char(p).p
    return tuple(_join_exponent(a, b, p) for a, b in zip(u, v))


def _components(I: MonomialIdeal):
    return None if I.is_unit() else frozenset(irreducible_decomposition(I))


def _join_components(U, V, p: int) -> frozenset:
    return minimal_components(join_irreducible(u, v, p) for u in U for v in V)


def _from_components(ctx, comps) -> MonomialIdeal:
    if comps is None:
        return MonomialIdeal.unit(ctx)
    # intersect small components first so intermediate ideals stay small
    ordered = sorted(comps, key=lambda u: sum(1 for e in u if e))
    return intersect_all(ctx, (component_ideal(ctx, u) for u in ordered))


def join(I: MonomialIdeal, J: MonomialIdeal, p=0) -> MonomialIdeal:
    """I * J by irreducible decomposition (any characteristic)."""
    if I.ctx != J.ctx:
        raise InvalidInput("ideals live in different variable contexts")
    U, V = _components(I), _components(J)
    if U is None or V is None:
        return MonomialIdeal.unit(I.ctx)
    return _from_components(I.ctx, _join_components(U, V, _char(p).p))


def default_join_avec(I: MonomialIdeal, J: MonomialIdeal) -> tuple:
    d = [max(x, y) for x, y in zip(I.max_exponents(), J.max_exponents())]
    return tuple(max(2 * di - 1, 1) for di in d)


def default_secant_avec(I: MonomialIdeal, r: int) -> tuple:
    return tuple(max(r * di - r + 1, 1) for di in I.max_exponents())


def _check_avec(a, minimum) -> tuple:
    a = tuple(int(x) for x in a)
    if len(a) != len(minimum):
        raise InvalidInput("box vector length does not match the context")
    if any(x < m for x, m in zip(a, minimum)):
        raise InvalidInput(f"box vector {a} is below the minimal admissible {minimum}")
    return a


def join_alexander(I: MonomialIdeal, J: MonomialIdeal, a=None, p=0) -> MonomialIdeal:
    """I * J = (I^[a] J^[a])^[2a] modulo m^{a+1}, characteristic zero only."""
    if _char(p).p != 0:
        raise UnsupportedMethod("the Alexander-duality route is valid in characteristic 0 only")
    if I.ctx != J.ctx:
        raise InvalidInput("ideals live in different variable contexts")
    minimum = default_join_avec(I, J)
    a = minimum if a is None else _check_avec(a, minimum)
    prod = product(alexander_dual(I, a), alexander_dual(J, a))
    return modulo_box(alexander_dual(prod, [2 * x for x in a]), a)


def secant_alexander(I: MonomialIdeal, r: int, a=None) -> MonomialIdeal:
    """((I^[a])^r)^[ra] modulo m^{a+1}."""
    minimum = default_secant_avec(I, r)
    a = minimum if a is None else _check_avec(a, minimum)
    dual_power = power(alexander_dual(I, a), r)
    return modulo_box(alexander_dual(dual_power, [r * x for x in a]), a)


def secant_decomposition(I: MonomialIdeal, r: int, p=0) -> MonomialIdeal:
    comps = _components(I)
    if comps is None:
        return I
    p = _char(p).p
    acc = comps
    for _ in range(r - 1):
        acc = _join_components(acc, comps, p)
    return _from_components(I.ctx, acc)


def secant_box(I: MonomialIdeal, r: int) -> tuple:
    """Exponent caps containing every minimal generator of the r-th secant (char 0)."""
    return tuple(r * d - r + 1 if d else 0 for d in I.max_exponents())


def secant_oracle(I: MonomialIdeal, r: int, d: Optional[int] = None) -> JoinResult:
    """Minimal generators of I^{r} of degree <= d by factoring standard monomials.

    Characteristic zero semantics.  When ``d`` is omitted the certified bound
    (sum of the box caps) is used and the result is complete.
    """
    if r < 1:
        raise InvalidInput("r must be at least 1")
    box = secant_box(I, r)
    full = sum(box)
    if d is None:
        d = full
    if d < 0:
        raise InvalidInput("degree bound must be non-negative")
    shape = tuple(b + 1 for b in box)
    std = np.ones(shape, dtype=bool)
    for g in I.gens:
        std[tuple(slice(e, None) for e in g)] = False
    acc = std.copy()
    offsets = [tuple(t) for t in np.argwhere(std)]
    for _ in range(r - 1):
        nxt = np.zeros(shape, dtype=bool)
        for t in offsets:
            dst = tuple(slice(e, None) for e in t)
            src = tuple(slice(0, s - e) for s, e in zip(shape, t))
            nxt[dst] |= acc[src]
        acc = nxt
    nonstd = ~acc
    minimal = nonstd.copy()
    for axis in range(len(shape)):
        below = np.ones(shape, dtype=bool)  # exponent 0 along this axis: nothing below
        idx_dst = [slice(None)] * len(shape)
        idx_src = [slice(None)] * len(shape)
        idx_dst[axis] = slice(1, None)
        idx_src[axis] = slice(0, -1)
        below[tuple(idx_dst)] = acc[tuple(idx_src)]
        minimal &= below
    gens = [tuple(int(x) for x in e) for e in np.argwhere(minimal) if int(e.sum()) <= d]
    return JoinResult(
        MonomialIdeal(I.ctx, gens), "oracle", FieldChar(0), degree_bound=d, truncated=d < full
    )


def secant(I: MonomialIdeal, r: int, p=0, method: str = "decomposition",
           a=None, degree_bound: Optional[int] = None) -> JoinResult:
    """The r-th secant I^{r} = I * ... * I (r factors)."""
    if not isinstance(r, int) or r < 1:
        raise InvalidInput(f"r must be a positive integer, got {r!r}")
    method = _ALIASES.get(method, method)
    fc = _char(p)
    if method == "decomposition":
        return JoinResult(secant_decomposition(I, r, fc), method, fc)
    if method == "alexander":
        if fc.p != 0:
            raise UnsupportedMethod("the Alexander-duality route is valid in characteristic 0 only")
        return JoinResult(secant_alexander(I, r, a), method, fc)
    if method == "oracle":
        if fc.p != 0:
            raise UnsupportedMethod("the factorization oracle is valid in characteristic 0 only")
        return secant_oracle(I, r, degree_bound)
    raise InvalidInput(f"unknown method {method!r}; expected one of {METHODS}")


def indeg(I: MonomialIdeal) -> Optional[int]:
    """Smallest degree of a minimal generator (None for the zero ideal)."""
    return min((sum(g) for g in I.gens), default=None)
