"""Exact arithmetic on monomials and monomial ideals.

A monomial is a plain tuple of non-negative exponents.  A
:class:`MonomialIdeal` stores its minimal generators in canonical order
(total degree, then lexicographically with the first variable heaviest), so
two ideals are equal exactly when their representations are equal.

The zero ideal has no generators; the unit ideal has the single all-zero
exponent vector as generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import ContextMismatch, InvalidInput

Monomial = tuple  # tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def support(m: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(m) if e)


def sort_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def minimalize(gens: Iterable[Monomial]) -> tuple:
    """Minimal elements under divisibility, canonically sorted."""
    kept: list = []
    for g in sorted(set(gens), key=sort_key):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


def monomials_up_to(n: int, d: int) -> list:
    """All exponent vectors in n variables of total degree <= d, canonically sorted."""
    out = []
    for k in range(d + 1):
        for combo in combinations_with_replacement(range(n), k):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    out.sort(key=sort_key)
    return out


@dataclass(frozen=True)
class VariableContext:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise InvalidInput("a variable context needs at least one variable")
        if len(set(names)) != len(names):
            raise InvalidInput(f"duplicate variable names in {names}")

    @classmethod
    def standard(cls, n: int, prefix: str = "x", start: int = 1) -> "VariableContext":
        return cls(tuple(f"{prefix}{i}" for i in range(start, start + n)))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidInput(f"unknown variable {name!r}") from None

    def one(self) -> Monomial:
        return (0,) * self.n

    def var(self, i: int, e: int = 1) -> Monomial:
        m = [0] * self.n
        m[i] = e
        return tuple(m)

    def monomial(self, text: str) -> Monomial:
        """Parse ``"x^2 y"`` or ``"x^2*y"``; ``"1"`` is the constant monomial."""
        m = [0] * self.n
        text = text.replace("*", " ").strip()
        if text in ("", "1"):
            return tuple(m)
        for tok in text.split():
            name, _, exp = tok.partition("^")
            m[self.index(name)] += int(exp) if exp else 1
        return tuple(m)

    def format(self, m: Monomial, sep: str = " ") -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return sep.join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    ctx: VariableContext
    gens: tuple = ()

    def __post_init__(self):
        n = self.ctx.n
        gens = [tuple(g) for g in self.gens]
        for g in gens:
            if len(g) != n:
                raise ContextMismatch(f"monomial {g} has {len(g)} exponents, context has {n} variables")
            if any(e < 0 for e in g):
                raise InvalidInput(f"negative exponent in {g}")
        object.__setattr__(self, "gens", minimalize(gens))

    @classmethod
    def zero(cls, ctx: VariableContext) -> "MonomialIdeal":
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx: VariableContext) -> "MonomialIdeal":
        return cls(ctx, (ctx.one(),))

    @classmethod
    def parse(cls, ctx: VariableContext, gens: Iterable[str]) -> "MonomialIdeal":
        return cls(ctx, [ctx.monomial(g) for g in gens])

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (self.ctx.one(),)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def max_exponents(self) -> tuple:
        """Largest power of each variable among the minimal generators."""
        if not self.gens:
            return (0,) * self.ctx.n
        return tuple(max(col) for col in zip(*self.gens))

    def max_degree(self) -> int:
        return max((degree(g) for g in self.gens), default=0)

    def degrees(self) -> list:
        return sorted({degree(g) for g in self.gens})

    def truncate(self, d: int) -> "MonomialIdeal":
        """Ideal generated by the minimal generators of degree <= d."""
        return MonomialIdeal(self.ctx, [g for g in self.gens if degree(g) <= d])

    def __str__(self) -> str:
        if not self.gens:
            return "<0>"
        return "<" + ", ".join(self.ctx.format(g, "*") for g in self.gens) + ">"


def normalize(ctx: VariableContext, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(ctx, list(gens))


def _same_context(*ideals: MonomialIdeal) -> VariableContext:
    ctx = ideals[0].ctx
    for other in ideals[1:]:
        if other.ctx != ctx:
            raise ContextMismatch("ideals live in different variable contexts")
    return ctx


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != I.ctx.n:
        raise ContextMismatch(f"monomial {m} does not match the context of {I}")
    return m in I


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_context(I, J)
    return all(g in J for g in I.gens)


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    ctx = _same_context(*ideals)
    return MonomialIdeal(ctx, [g for I in ideals for g in I.gens])


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _same_context(I, J)
    return MonomialIdeal(ctx, [lcm(a, b) for a in I.gens for b in J.gens])


def intersect_all(ctx: VariableContext, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of a family; the empty family gives the unit ideal."""
    return reduce(intersect, ideals, MonomialIdeal.unit(ctx))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _same_context(I, J)
    return MonomialIdeal(ctx, [mul(a, b) for a in I.gens for b in J.gens])


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise InvalidInput("negative power")
    result = MonomialIdeal.unit(I.ctx)
    for _ in range(k):
        result = product(result, I)
    return result


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J, the intersection over generators g of J of (I : g)."""
    ctx = _same_context(I, J)
    quotients = (
        MonomialIdeal(ctx, [tuple(max(h - e, 0) for h, e in zip(f, g)) for f in I.gens])
        for g in J.gens
    )
    return intersect_all(ctx, quotients)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ctx, [tuple(min(e, 1) for e in g) for g in I.gens])


def standard_monomials(I: MonomialIdeal, d: int) -> list:
    if d < 0:
        raise InvalidInput("degree bound must be non-negative")
    return [m for m in monomials_up_to(I.ctx.n, d) if m not in I]


# -- irreducible decomposition ---------------------------------------------

def component_ideal(ctx: VariableContext, u: Sequence[int]) -> MonomialIdeal:
    """m^u = <x_i^{u_i} : u_i > 0>; the zero vector gives the zero ideal."""
    if len(u) != ctx.n:
        raise ContextMismatch(f"component {tuple(u)} does not match {ctx.n} variables")
    return MonomialIdeal(ctx, [ctx.var(i, e) for i, e in enumerate(u) if e > 0])


def component_contained(v: Sequence[int], u: Sequence[int]) -> bool:
    """True when m^v is contained in m^u."""
    return all(ui > 0 and ui <= vi for ui, vi in zip(u, v) if vi > 0)


def minimal_components(components: Iterable[tuple]) -> frozenset:
    """Drop every m^u that contains some other listed component."""
    comps = set(components)
    return frozenset(
        u for u in comps
        if not any(v != u and component_contained(v, u) for v in comps)
    )


@lru_cache(maxsize=None)
def _decompose(gens: tuple, n: int) -> frozenset:
    if not gens:
        return frozenset({(0,) * n})
    mixed = next((g for g in gens if sum(1 for e in g if e) >= 2), None)
    if mixed is None:
        if any(not any(g) for g in gens):
            return frozenset()  # unit ideal: empty intersection
        u = [0] * n
        for g in gens:
            i = next(k for k, e in enumerate(g) if e)
            u[i] = g[i]
        return frozenset({tuple(u)})
    i = next(k for k, e in enumerate(mixed) if e)
    pure = tuple(mixed[i] if k == i else 0 for k in range(n))
    rest = tuple(0 if k == i else e for k, e in enumerate(mixed))
    left = _decompose(minimalize(gens + (pure,)), n)
    right = _decompose(minimalize(gens + (rest,)), n)
    return minimal_components(left | right)


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """Irredundant irreducible components of I, as exponent vectors, sorted."""
    if I.is_unit():
        raise InvalidInput("the unit ideal has no irreducible decomposition")
    return sorted(_decompose(I.gens, I.ctx.n), key=sort_key)


# -- Alexander duality ------------------------------------------------------

def modulo_box(I: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """Drop the generators divisible by x_i^{a_i+1} for some i."""
    if len(a) != I.ctx.n:
        raise ContextMismatch("box vector length does not match the context")
    return MonomialIdeal(I.ctx, [g for g in I.gens if all(e <= ai for e, ai in zip(g, a))])


def box_ideal(ctx: VariableContext, a: Sequence[int]) -> MonomialIdeal:
    """m^{a+1}."""
    return MonomialIdeal(ctx, [ctx.var(i, ai + 1) for i, ai in enumerate(a)])


def alexander_dual(I: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """I^[a] = (m^{a+1} : I) modulo m^{a+1}.

    Requires every minimal generator of I to divide x^a.
    """
    a = tuple(a)
    if len(a) != I.ctx.n:
        raise ContextMismatch("box vector length does not match the context")
    for g in I.gens:
        if not divides(g, a):
            raise InvalidInput(f"box vector {a} is too small for generator {I.ctx.format(g)}")
    return modulo_box(colon(box_ideal(I.ctx, a), I), a)
