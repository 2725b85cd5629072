"""Extended integers and eventually quasi-periodic integer sequences.

Perversity functions and the boundaries of upper sets of ZxZ are both
monotone functions Z -> Z u {-inf, +inf} that are determined by a finite
block of values plus a periodic rule on each side.  This module holds that
shared representation and the exact algorithms on it (pointwise
comparison, generalized inverses, canonical forms).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Union


class _Infinity:
    """One of the two symbols +inf / -inf, ordered against ints."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self) -> str:
        return "+inf" if self.sign > 0 else "-inf"

    def __hash__(self) -> int:
        return hash(("heartglue-inf", self.sign))

    # INF and NEG_INF are the only instances (pickling goes through _infinity)
    def __eq__(self, other) -> bool:
        return self is other

    def __ne__(self, other) -> bool:
        return self is not other

    def __lt__(self, other) -> bool:
        if isinstance(other, _Infinity):
            return self.sign < other.sign
        if isinstance(other, int):
            return self.sign < 0
        return NotImplemented

    def __gt__(self, other) -> bool:
        if isinstance(other, _Infinity):
            return self.sign > other.sign
        if isinstance(other, int):
            return self.sign > 0
        return NotImplemented

    def __le__(self, other) -> bool:
        return self == other or self < other

    def __ge__(self, other) -> bool:
        return self == other or self > other

    def __neg__(self) -> "_Infinity":
        return NEG_INF if self.sign > 0 else INF

    def __add__(self, other):
        if isinstance(other, int):
            return self
        if isinstance(other, _Infinity) and other.sign == self.sign:
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        if isinstance(other, _Infinity) and other.sign != self.sign:
            return self
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return -self
        return NotImplemented

    def __reduce__(self):
        return (_infinity, (self.sign,))


def _infinity(sign: int) -> _Infinity:
    return INF if sign > 0 else NEG_INF


INF = _Infinity(1)
NEG_INF = _Infinity(-1)

ExtInt = Union[int, _Infinity]


def is_finite(v: ExtInt) -> bool:
    return not isinstance(v, _Infinity)


def ext_to_json(v: ExtInt):
    return repr(v) if isinstance(v, _Infinity) else v


def ext_from_json(v) -> ExtInt:
    if v == "+inf":
        return INF
    if v == "-inf":
        return NEG_INF
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"expected an integer or '+inf'/'-inf', got {v!r}")
    return v


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Tail:
    """Periodic rule for one end: moving one period outward changes the value by `step`."""

    period: int
    step: int

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"tail period must be >= 1, got {self.period}")


CONSTANT = Tail(1, 0)


@dataclass(frozen=True, eq=False)
class QuasiPeriodic:
    """An eventually quasi-periodic function Z -> Z u {+-inf}.

    Explicit values cover ``start .. start+len(values)-1``.  Below the block,
    ``v(n) = v(n + left.period) - left.step``; above it,
    ``v(n) = v(n - right.period) + right.step``.  The block must be at least
    as long as either period.

    Equality is equality of functions (the canonical form is compared).
    Sequences are assumed monotone wherever infinite values occur.
    """

    start: int
    values: tuple
    left: Tail = CONSTANT
    right: Tail = CONSTANT

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("explicit block must be nonempty")
        if len(self.values) < max(self.left.period, self.right.period):
            raise ValueError(
                "explicit block shorter than a tail period "
                f"({len(self.values)} < {max(self.left.period, self.right.period)})"
            )
        object.__setattr__(self, "_end", self.start + len(self.values) - 1)

    @classmethod
    def constant(cls, value: ExtInt) -> "QuasiPeriodic":
        return cls(0, (value,))

    @classmethod
    def linear(cls, slope: int, offset: int = 0) -> "QuasiPeriodic":
        return cls(0, (offset,), Tail(1, slope), Tail(1, slope))

    @property
    def end(self) -> int:
        return self._end

    def __call__(self, n: int) -> ExtInt:
        start = self.start
        if n < start:
            T, S = self.left.period, self.left.step
            q = (start - n + T - 1) // T
            v = self.values[n + q * T - start]
            return v - q * S if S else v
        end = self._end
        if n > end:
            T, S = self.right.period, self.right.step
            q = (n - end + T - 1) // T
            v = self.values[n - q * T - start]
            return v + q * S if S else v
        return self.values[n - start]

    def window(self, lo: int, hi: int) -> list:
        """[v(lo), ..., v(hi)], unrolling the tail rules step by step."""
        if hi < lo:
            return []
        start, end = self.start, self._end
        vals = list(self.values)
        T, S = self.right.period, self.right.step
        for _ in range(hi - end):
            vals.append(vals[-T] + S if S else vals[-T])
        k = start - lo
        if k > 0:
            T, S = self.left.period, self.left.step
            pre = [None] * k
            for i in range(k - 1, -1, -1):
                v = pre[i + T] if i + T < k else vals[i + T - k]
                pre[i] = v - S if S else v
            vals = pre + vals
            base = lo
        else:
            base = start
        return vals[lo - base : hi - base + 1]

    @property
    def margin(self) -> int:
        """Distance beyond the block after which both tails have repeated at least twice."""
        return 2 * (self.left.period + self.right.period) + 2

    # -- elementary transformations -------------------------------------

    def shift_arg(self, k: int) -> "QuasiPeriodic":
        """n -> v(n + k)."""
        return QuasiPeriodic(self.start - k, self.values, self.left, self.right)

    def add(self, c: int) -> "QuasiPeriodic":
        return QuasiPeriodic(self.start, tuple(v + c for v in self.values), self.left, self.right)

    def add_linear(self, a: int) -> "QuasiPeriodic":
        """n -> v(n) + a*n."""
        vals = tuple(v + a * (self.start + i) for i, v in enumerate(self.values))
        return QuasiPeriodic(
            self.start,
            vals,
            Tail(self.left.period, self.left.step + a * self.left.period),
            Tail(self.right.period, self.right.step + a * self.right.period),
        )

    def negate(self) -> "QuasiPeriodic":
        return QuasiPeriodic(
            self.start,
            tuple(-v for v in self.values),
            Tail(self.left.period, -self.left.step),
            Tail(self.right.period, -self.right.step),
        )

    def reflect(self) -> "QuasiPeriodic":
        """n -> v(-n)."""
        return QuasiPeriodic(
            -self.end,
            tuple(reversed(self.values)),
            Tail(self.right.period, -self.right.step),
            Tail(self.left.period, -self.left.step),
        )

    # -- predicates -------------------------------------------------------

    def _scan(self) -> range:
        m = self.margin
        return range(self.start - m, self.end + m + 1)

    def first_violation(self, pred: Callable[[ExtInt, ExtInt], bool], gap: int = 1):
        """First n (in the decisive scan range) where pred(v(n), v(n+gap)) fails, else None.

        Sound and complete for predicates of consecutive values when the tails
        are periodic in their differences, which holds for every sequence here.
        """
        m = self.margin + 2 * gap
        lo = self.start - m
        vals = self.window(lo, self.end + m + gap)
        for i in range(len(vals) - gap):
            if not pred(vals[i], vals[i + gap]):
                return lo + i
        return None

    def is_nondecreasing(self) -> bool:
        return self.first_violation(lambda a, b: a <= b) is None

    def is_nonincreasing(self) -> bool:
        return self.first_violation(lambda a, b: a >= b) is None

    def _tail_is_infinite(self, side: str) -> bool:
        block = self.values[: self.left.period] if side == "left" else self.values[-self.right.period:]
        return any(not is_finite(v) for v in block)

    def _tail_slope(self, side: str):
        """(step, period) of a finite tail, or None for an infinite one."""
        if self._tail_is_infinite(side):
            return None
        t = self.left if side == "left" else self.right
        return (t.step, t.period)

    # -- canonical form ---------------------------------------------------

    def _minimal_tail(self, side: str) -> Tail:
        t = self.left if side == "left" else self.right
        if self._tail_is_infinite(side):
            return CONSTANT
        T, S = t.period, t.step
        block = self.values[:T] if side == "left" else self.values[-T:]
        diffs = [block[i + 1] - block[i] for i in range(T - 1)] + [block[0] + S - block[T - 1]]
        for d in range(1, T + 1):
            if T % d == 0 and all(diffs[i] == diffs[(i + d) % T] for i in range(T)):
                return Tail(d, S * d // T)
        raise AssertionError("unreachable")

    @cached_property
    def canonical(self) -> "QuasiPeriodic":
        left = self._minimal_tail("left")
        right = self._minimal_tail("right")
        L = max(left.period, right.period)
        m = 2 * (self.left.period + self.right.period + L) + 4
        lo, hi = self.start - m, self.end + m
        pad = max(left.period, right.period)
        vals = self.window(lo - pad, hi + pad)
        # index i of vals holds the value at lo - pad + i
        Tl, Sl = left.period, left.step
        lam = None
        for i in range(pad, pad + hi - lo + 1):
            y = vals[i + Tl]
            if vals[i] != (y - Sl if Sl else y):
                lam = lo - pad + i
                break
        Tr, Sr = right.period, right.step
        rho = None
        for i in range(pad + hi - lo, pad - 1, -1):
            y = vals[i - Tr]
            if vals[i] != (y + Sr if Sr else y):
                rho = lo - pad + i
                break
        if lam is not None:
            s = lam
            e = max(rho if rho is not None else s, s + L - 1)
        elif rho is not None:
            e = rho
            s = e - L + 1
        else:
            s, e = 0, L - 1
        vals = tuple(self(n) for n in range(s, e + 1))
        out = QuasiPeriodic(s, vals, left, right)
        out.__dict__["canonical"] = out
        return out

    def _key(self):
        c = self.canonical
        return (c.start, c.values, c.left, c.right)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuasiPeriodic):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        c = self.canonical
        return (
            f"QuasiPeriodic(start={c.start}, values={list(c.values)}, "
            f"left=({c.left.period},{c.left.step}), right=({c.right.period},{c.right.step}))"
        )

    # -- construction from a pointwise rule --------------------------------

    @classmethod
    def from_function(
        cls,
        fn: Callable[[int], ExtInt],
        lo: int,
        hi: int,
        left: Tail = CONSTANT,
        right: Tail = CONSTANT,
    ) -> "QuasiPeriodic":
        """Tabulate fn on [lo, hi] and attach the given tails.

        The tails must be known to be valid outside [lo, hi]; a few extra
        periods on each side are compared against fn as a consistency check.
        """
        L = max(left.period, right.period)
        if hi - lo + 1 < L:
            hi = lo + L - 1
        seq = cls(lo, tuple(fn(n) for n in range(lo, hi + 1)), left, right)
        for n in list(range(lo - 2 * left.period - 2, lo)) + list(range(hi + 1, hi + 2 * right.period + 3)):
            if seq(n) != fn(n):
                raise AssertionError(f"tail rule disagrees with pointwise rule at n={n}")
        return seq.canonical


def compare_pointwise(a: QuasiPeriodic, b: QuasiPeriodic) -> set:
    """Signs of a(n) - b(n) occurring for some n, exact over all of Z.

    A sign of 0 may be missed when the two tails have different slopes; the
    result is still exact for deciding <=, >= and equality.
    """
    periods = [a.left.period, a.right.period, b.left.period, b.right.period]
    lcm = math.lcm(*periods)
    m = 2 * lcm + max(a.margin, b.margin)
    lo = min(a.start, b.start) - m
    hi = max(a.end, b.end) + m
    signs = set()
    for x, y in zip(a.window(lo, hi), b.window(lo, hi)):
        signs.add(0 if x == y else (1 if x > y else -1))
    for side, direction in (("right", 1), ("left", -1)):
        sa, sb = a._tail_slope(side), b._tail_slope(side)
        if sa is None or sb is None:
            continue
        c = _sign(sa[0] * sb[1] - sb[0] * sa[1])
        if c:
            signs.add(c * direction)
    return signs


def upper_inverse(h: QuasiPeriodic) -> QuasiPeriodic:
    """For nondecreasing h, the function a -> max{m : h(m) <= a} (values in Z u {+-inf})."""
    h = h.canonical
    rfin = not h._tail_is_infinite("right")
    lfin = not h._tail_is_infinite("left")
    top = h(h.end)  # value reached by a constant right tail
    bottom = h(h.start)

    def value(a: int) -> ExtInt:
        if rfin and h.right.step == 0 and a >= top:
            return INF
        if not rfin and top == NEG_INF:
            return INF
        if lfin and h.left.step == 0 and a < bottom:
            return NEG_INF
        if not lfin and bottom == INF:
            return NEG_INF
        hi = h.end
        step = 1
        while h(hi) <= a:
            hi += step
            step *= 2
        lo = h.start
        step = 1
        while h(lo) > a:
            lo -= step
            step *= 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if h(mid) <= a:
                lo = mid
            else:
                hi = mid
        return lo

    def out_tail(side: str) -> Tail:
        t = h.left if side == "left" else h.right
        if h._tail_is_infinite(side) or t.step == 0:
            return CONSTANT
        return Tail(t.step, t.period)

    left, right = out_tail("left"), out_tail("right")
    finite = [v for v in h.window(h.start - h.margin, h.end + h.margin) if is_finite(v)]
    if finite:
        k = 2 * (left.period + right.period + h.left.period + h.right.period) + 4
        lo, hi = min(finite) - k, max(finite) + k
    else:
        lo, hi = 0, 0
    return QuasiPeriodic.from_function(value, lo, hi, left, right)


def lower_inverse(h: QuasiPeriodic) -> QuasiPeriodic:
    """For nondecreasing h, the function a -> min{m : h(m) >= a}."""
    return upper_inverse(h).shift_arg(-1).add(1)


def enumerate_monotone(length: int, lo: int, hi: int, steps: Iterable[int]) -> list:
    """All integer tuples of the given length with values in [lo, hi] and consecutive differences in `steps`."""
    steps = tuple(steps)
    out = []

    def extend(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for s in steps:
            v = prefix[-1] + s
            if lo <= v <= hi:
                prefix.append(v)
                extend(prefix)
                prefix.pop()

    if length <= 0 or lo > hi:
        return out
    for v0 in range(lo, hi + 1):
        extend([v0])
    return out
