"""Perversity functions on Z.

A perversity is a function p: Z -> Z with p(n) <= p(n+1) <= p(n) + 1.
Here it is stored as an explicit block of values plus a periodic rule on
each side, which covers every perversity built from the usual examples and
is closed under both Z-actions.  The two constant infinite perversities are
separate values (``PLUS_INF``, ``MINUS_INF``).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .sequences import (
    INF,
    NEG_INF,
    QuasiPeriodic,
    Tail,
    compare_pointwise,
    enumerate_monotone,
)
from .zposet import DomainError, Verdict


class Comparison(Enum):
    LE = "LE"
    GE = "GE"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


def _as_tail(t) -> Tail:
    if isinstance(t, Tail):
        return t
    period, step = t
    return Tail(int(period), int(step))


@dataclass(frozen=True, eq=False)
class Perversity:
    anchor: int = 0
    values: tuple = (0,)
    left_tail: Tail = Tail(1, 0)
    right_tail: Tail = Tail(1, 0)
    infinite: int = 0  # +1 for p_{+inf}, -1 for p_{-inf}

    def __post_init__(self):
        object.__setattr__(self, "left_tail", _as_tail(self.left_tail))
        object.__setattr__(self, "right_tail", _as_tail(self.right_tail))
        object.__setattr__(self, "values", tuple(self.values))
        if self.infinite not in (-1, 0, 1):
            raise DomainError("infinite must be -1, 0 or +1")
        if self.infinite:
            return
        for t in (self.left_tail, self.right_tail):
            if not 0 <= t.step <= t.period:
                raise DomainError(f"tail (T={t.period}, S={t.step}) needs 0 <= S <= T")
        if any(isinstance(v, bool) or not isinstance(v, int) for v in self.values):
            raise DomainError("perversity values must be integers")
        try:
            seq = self.seq
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        bad = seq.first_violation(lambda a, b: a <= b <= a + 1)
        if bad is not None:
            raise DomainError(
                f"not a perversity: p({bad})={seq(bad)}, p({bad + 1})={seq(bad + 1)}"
            )

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "Perversity":
        return cls(0, (0,))

    @classmethod
    def constant(cls, c: int) -> "Perversity":
        return cls(0, (c,))

    @classmethod
    def identity(cls) -> "Perversity":
        return cls(0, (0,), Tail(1, 1), Tail(1, 1))

    @classmethod
    def middle(cls) -> "Perversity":
        """n -> floor(n / 2)."""
        return cls(0, (0, 0), Tail(2, 1), Tail(2, 1))

    @classmethod
    def chi(cls, k: int) -> "Perversity":
        """Characteristic function of [k, +inf)."""
        return cls(k - 1, (0, 1))

    @classmethod
    def from_seq(cls, seq: QuasiPeriodic) -> "Perversity":
        c = seq.canonical
        return cls(c.start, c.values, c.left, c.right)

    @classmethod
    def from_f(cls, f: QuasiPeriodic) -> "Perversity":
        """Inverse of to_f: p(n) = f(n) + n."""
        bad = f.first_violation(lambda a, b: b <= a <= b + 1)
        if bad is not None:
            raise DomainError(
                "f must be nonincreasing with f(n-1) <= f(n)+1; "
                f"fails between n={bad} and n={bad + 1}"
            )
        return cls.from_seq(f.add_linear(1))

    # -- basic access -----------------------------------------------------

    @cached_property
    def seq(self) -> QuasiPeriodic:
        if self.infinite:
            raise DomainError("infinite perversity has no finite description")
        return QuasiPeriodic(self.anchor, self.values, self.left_tail, self.right_tail)

    @property
    def is_finite(self) -> bool:
        return not self.infinite

    def __call__(self, n: int):
        if self.infinite:
            return INF if self.infinite > 0 else NEG_INF
        return self.seq(n)

    def __repr__(self) -> str:
        if self.infinite:
            return "p_{+inf}" if self.infinite > 0 else "p_{-inf}"
        c = self.seq.canonical
        return (
            f"Perversity(anchor={c.start}, values={list(c.values)}, "
            f"left=({c.left.period},{c.left.step}), right=({c.right.period},{c.right.step}))"
        )

    def canonical(self) -> "Perversity":
        return self if self.infinite else Perversity.from_seq(self.seq)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Perversity):
            return NotImplemented
        if self.infinite or other.infinite:
            return self.infinite == other.infinite
        return self.seq == other.seq

    def __hash__(self) -> int:
        return hash(("inf", self.infinite)) if self.infinite else hash(self.seq)

    # -- predicates -------------------------------------------------------

    def strict_violation(self):
        """First n with p(n+2) > p(n) + 1, or None."""
        if self.infinite:
            raise DomainError("strictness is only defined for finite perversities")
        return self.seq.first_violation(lambda a, c: c <= a + 1, gap=2)

    def is_strict(self) -> bool:
        return self.strict_violation() is None

    # -- actions ----------------------------------------------------------

    def act_dot(self, k: int) -> "Perversity":
        """n -> p(n + k)."""
        return self if self.infinite else Perversity.from_seq(self.seq.shift_arg(k))

    def act_plus(self, k: int) -> "Perversity":
        """n -> p(n) + k."""
        return self if self.infinite else Perversity.from_seq(self.seq.add(k))

    # -- order ------------------------------------------------------------

    def compare(self, other: "Perversity") -> Comparison:
        if self.infinite or other.infinite:
            a = self.infinite if self.infinite else 0
            b = other.infinite if other.infinite else 0
            if self.infinite and self.infinite == other.infinite:
                return Comparison.EQ
            return Comparison.LE if a < b else Comparison.GE
        signs = compare_pointwise(self.seq, other.seq)
        if signs <= {0}:
            return Comparison.EQ
        if 1 not in signs:
            return Comparison.LE
        if -1 not in signs:
            return Comparison.GE
        return Comparison.INCOMPARABLE

    def __le__(self, other: "Perversity") -> bool:
        return self.compare(other) in (Comparison.LE, Comparison.EQ)

    def __ge__(self, other: "Perversity") -> bool:
        return self.compare(other) in (Comparison.GE, Comparison.EQ)

    # -- the associated nonincreasing function ---------------------------

    def to_f(self) -> QuasiPeriodic:
        """f_p(n) = p(n) - n."""
        if self.infinite:
            raise DomainError("f_p is only defined for finite perversities")
        return self.seq.add_linear(-1).canonical


PLUS_INF = Perversity(infinite=1)
MINUS_INF = Perversity(infinite=-1)


def compare(p: Perversity, q: Perversity) -> Comparison:
    return p.compare(q)


def f_act_dot(f: QuasiPeriodic, k: int = 1) -> QuasiPeriodic:
    """(f dot k)(n) = f(n + k) + k."""
    return f.shift_arg(k).add(k)


def enumerate_perversities(window: tuple[int, int], value_range: tuple[int, int]) -> list:
    """Every step-0/1 sequence on the window with values in range, extended by constant tails."""
    n0, n1 = window
    v0, v1 = value_range
    return [Perversity(n0, vals) for vals in enumerate_monotone(n1 - n0 + 1, v0, v1, (0, 1))]


def strictness_witness(p: Perversity, lo: int, hi: int) -> Verdict:
    """Check p(n) - p(m) < n - m for all n - m >= 2 with m, n in [lo, hi]."""
    checked = 0
    for m in range(lo, hi + 1):
        for n in range(m + 2, hi + 1):
            checked += 1
            if not p(n) - p(m) < n - m:
                return Verdict(False, (m, n), checked)
    return Verdict(True, None, checked)
