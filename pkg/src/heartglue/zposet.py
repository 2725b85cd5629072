"""Totally ordered sets with a monotone Z-action, and equivariant maps between them.

Elements are plain ints or (nested) pairs of ints, so the lexicographic
order of a product coincides with Python's tuple order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Callable, Iterable, Mapping


class DomainError(ValueError):
    """An element, map or argument lies outside the domain of an operation."""


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class Verdict:
    """Outcome of a windowed check: truth value, first witness, number of cases checked."""

    holds: bool
    witness: Any = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.holds


class ZToset:
    """Base class.  Subclasses implement contains/shift/window."""

    trivial_action = False

    def contains(self, x) -> bool:
        raise NotImplementedError

    def check(self, x):
        if not self.contains(x):
            raise DomainError(f"{x!r} is not an element of {self}")
        return x

    def compare(self, x, y) -> Ordering:
        self.check(x)
        self.check(y)
        return Ordering((x > y) - (x < y))

    def le(self, x, y) -> bool:
        return self.compare(x, y) <= 0

    def shift(self, x, n: int):
        raise NotImplementedError

    def window(self, lo: int, hi: int) -> list:
        """Elements whose coordinates all lie in [lo, hi], in increasing order."""
        raise NotImplementedError


@dataclass(frozen=True)
class IntTranslation(ZToset):
    """Z with x + n."""

    def __str__(self):
        return "Z"

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def shift(self, x, n):
        return self.check(x) + n

    def window(self, lo, hi):
        return list(range(lo, hi + 1))


@dataclass(frozen=True)
class IntTrivial(ZToset):
    """Z with the trivial action (written Z-hat)."""

    trivial_action = True

    def __str__(self):
        return "Zhat"

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def shift(self, x, n):
        return self.check(x)

    def window(self, lo, hi):
        return list(range(lo, hi + 1))


@dataclass(frozen=True)
class FiniteInterval(ZToset):
    """{lo, ..., hi} with the trivial action, viewed inside Z-hat."""

    lo: int
    hi: int
    trivial_action = True

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"empty interval {self.lo}..{self.hi}")

    def __str__(self):
        return f"{{{self.lo}..{self.hi}}}"

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and self.lo <= x <= self.hi

    def shift(self, x, n):
        return self.check(x)

    def window(self, lo, hi):
        return list(range(max(lo, self.lo), min(hi, self.hi) + 1))


@dataclass(frozen=True)
class LexProduct(ZToset):
    """left x right with the lexicographic order and the diagonal action."""

    left: ZToset
    right: ZToset

    @property
    def trivial_action(self):
        return self.left.trivial_action and self.right.trivial_action

    def __str__(self):
        return f"{self.left} x_lex {self.right}"

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and self.left.contains(x[0])
            and self.right.contains(x[1])
        )

    def compare(self, x, y) -> Ordering:
        self.check(x)
        self.check(y)
        c = self.left.compare(x[0], y[0])
        return c if c != Ordering.EQ else self.right.compare(x[1], y[1])

    def shift(self, x, n):
        self.check(x)
        return (self.left.shift(x[0], n), self.right.shift(x[1], n))

    def window(self, lo, hi):
        return [(a, b) for a in self.left.window(lo, hi) for b in self.right.window(lo, hi)]


Z = IntTranslation()
ZHAT = IntTrivial()
Z_LEX_Z = LexProduct(Z, Z)
Z_LEX_ZHAT = LexProduct(Z, ZHAT)
ZHAT_LEX_Z = LexProduct(ZHAT, Z)


def compare(t: ZToset, x, y) -> Ordering:
    return t.compare(x, y)


def shift(t: ZToset, x, n: int):
    return t.shift(x, n)


# --------------------------------------------------------------------------
# maps


@dataclass(frozen=True)
class ZSetMap:
    """A Z-equivariant map of Z-tosets.  Not assumed monotone."""

    domain: ZToset
    codomain: ZToset
    rule: Callable[[Any], Any] = field(compare=False)
    name: str = "map"
    defined: Callable[[Any], bool] | None = field(default=None, compare=False)

    def __call__(self, x):
        if not self.defined_at(x):
            raise DomainError(f"{self.name} is not defined at {x!r}")
        return self.codomain.check(self.rule(x))

    def defined_at(self, x) -> bool:
        if not self.domain.contains(x):
            return False
        return self.defined is None or self.defined(x)

    def __repr__(self):
        return f"<ZSetMap {self.name}: {self.domain} -> {self.codomain}>"


def apply(m: ZSetMap, x):
    return m(x)


def identity(t: ZToset) -> ZSetMap:
    return ZSetMap(t, t, lambda x: x, "id")


def exchange(j1: ZToset = Z, j2: ZToset = Z) -> ZSetMap:
    return ZSetMap(LexProduct(j1, j2), LexProduct(j2, j1), lambda x: (x[1], x[0]), "e")


def alpha() -> ZSetMap:
    """(n, m) -> (n + m, -m) on Z x_lex Zhat."""
    return ZSetMap(Z_LEX_ZHAT, Z_LEX_ZHAT, lambda x: (x[0] + x[1], -x[1]), "alpha")


def beta() -> ZSetMap:
    """(n, m) -> (n, n + m), an isomorphism Z x_lex Zhat -> Z x_lex Z."""
    return ZSetMap(Z_LEX_ZHAT, Z_LEX_Z, lambda x: (x[0], x[0] + x[1]), "beta")


def beta_inverse() -> ZSetMap:
    return ZSetMap(Z_LEX_Z, Z_LEX_ZHAT, lambda x: (x[0], x[1] - x[0]), "beta^-1")


def _finite_perversity(p):
    if getattr(p, "infinite", 0):
        raise DomainError("gamma_p and g_p need a finite perversity")
    return p


def gamma_p(p) -> ZSetMap:
    """(n, phi) -> n + p(phi), from Z x_lex Zhat to Z."""
    _finite_perversity(p)
    return ZSetMap(Z_LEX_ZHAT, Z, lambda x: x[0] + p(x[1]), f"gamma[{p}]")


def g_p(p) -> ZSetMap:
    """(n, phi) -> (n + p(phi), -p(phi)) on Z x_lex Zhat."""
    _finite_perversity(p)
    return ZSetMap(Z_LEX_ZHAT, Z_LEX_ZHAT, lambda x: (x[0] + p(x[1]), -p(x[1])), f"g[{p}]")


def projection_first(t: LexProduct = Z_LEX_ZHAT) -> ZSetMap:
    return ZSetMap(t, t.left, lambda x: x[0], "pi1")


def compose(g: ZSetMap, f: ZSetMap) -> ZSetMap:
    """g after f."""
    if f.codomain != g.domain:
        raise DomainError(f"cannot compose {g.name} after {f.name}: {f.codomain} != {g.domain}")
    return ZSetMap(
        f.domain,
        g.codomain,
        lambda x: g(f(x)),
        f"{g.name}.{f.name}",
        lambda x: f.defined_at(x) and g.defined_at(f(x)),
    )


def table_map(domain: ZToset, codomain: ZToset, table: Mapping, name: str = "table") -> ZSetMap:
    """A map given by a finite table; undefined elsewhere."""
    table = dict(table)
    for x, y in table.items():
        domain.check(x)
        codomain.check(y)
    return ZSetMap(domain, codomain, table.__getitem__, name, table.__contains__)


# --------------------------------------------------------------------------
# windowed verification


def verify_equivariance(m: ZSetMap, window: Iterable) -> Verdict:
    """rule(x+1) == rule(x)+1 for every window element where both sides are defined."""
    checked = 0
    for x in window:
        y = m.domain.shift(x, 1)
        if not (m.defined_at(x) and m.defined_at(y)):
            continue
        checked += 1
        if m(y) != m.codomain.shift(m(x), 1):
            return Verdict(False, x, checked)
    return Verdict(True, None, checked)


def is_monotone(m: ZSetMap, window: Iterable) -> Verdict:
    """Witness: a pair x < y in the window with m(x) > m(y)."""
    pts = sorted(x for x in window if m.defined_at(x))
    checked = 0
    for x, y in itertools.combinations(pts, 2):
        checked += 1
        if m.codomain.compare(m(x), m(y)) == Ordering.GT:
            return Verdict(False, (x, y), checked)
    return Verdict(True, None, checked)


def is_order_isomorphism_on(m: ZSetMap, window: Iterable) -> Verdict:
    """Order is reflected and preserved on all pairs of the window."""
    pts = list(window)
    checked = 0
    for x, y in itertools.product(pts, repeat=2):
        checked += 1
        if m.domain.compare(x, y) != m.codomain.compare(m(x), m(y)):
            return Verdict(False, (x, y), checked)
    return Verdict(True, None, checked)
