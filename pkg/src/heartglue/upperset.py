"""Upper sets of Z and of Z x Z (product order), kinky upper sets, and the
correspondences between perversities and upper sets of Z x Z.

An upper set of Z x Z is stored through its boundary: a nonincreasing
function b: Z -> Z u {+-inf} with U = {(n, n') : n' >= b(n)}.  Column n is
empty when b(n) = +inf and full when b(n) = -inf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .perversity import MINUS_INF, PLUS_INF, Perversity
from .sequences import (
    CONSTANT,
    INF,
    NEG_INF,
    ExtInt,
    QuasiPeriodic,
    Tail,
    is_finite,
    lower_inverse,
    upper_inverse,
)
from .zposet import DomainError, Verdict


@dataclass(frozen=True)
class UpperSet1D:
    """[bound, +inf) in Z; bound = +inf is the empty set, -inf the whole line."""

    bound: ExtInt

    @classmethod
    def empty(cls):
        return cls(INF)

    @classmethod
    def full(cls):
        return cls(NEG_INF)

    def __contains__(self, x: int) -> bool:
        return x >= self.bound

    def __le__(self, other: "UpperSet1D") -> bool:
        """Inclusion."""
        return self.bound >= other.bound


# compass vectors for the Z-actions on Z x Z
ACTIONS = {
    "north": (0, 1),
    "northeast": (1, 1),
    "northwest": (-1, 1),
    "southwest": (-1, -1),
}


@dataclass(frozen=True, eq=False)
class UpperSet2D:
    boundary: QuasiPeriodic

    def __post_init__(self):
        bad = self.boundary.first_violation(lambda a, b: a >= b)
        if bad is not None:
            raise DomainError(
                f"boundary must be nonincreasing: b({bad})={self.boundary(bad)}, "
                f"b({bad + 1})={self.boundary(bad + 1)}"
            )
        object.__setattr__(self, "boundary", self.boundary.canonical)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_boundary(cls, start: int, values: Sequence[ExtInt], left: Tail = CONSTANT, right: Tail = CONSTANT):
        return cls(QuasiPeriodic(start, tuple(values), left, right))

    @classmethod
    def empty(cls) -> "UpperSet2D":
        return cls(QuasiPeriodic.constant(INF))

    @classmethod
    def full(cls) -> "UpperSet2D":
        return cls(QuasiPeriodic.constant(NEG_INF))

    @classmethod
    def row(cls, k: int) -> "UpperSet2D":
        """{(n, n') : n' >= k}."""
        return cls(QuasiPeriodic.constant(k))

    @classmethod
    def column(cls, k: int) -> "UpperSet2D":
        """{(n, n') : n >= k}."""
        return cls(QuasiPeriodic(k - 1, (INF, NEG_INF)))

    # -- basic queries ----------------------------------------------------

    def b(self, n: int) -> ExtInt:
        return self.boundary(n)

    def __contains__(self, pt) -> bool:
        n, m = pt
        return m >= self.boundary(n)

    def membership(self, pt) -> bool:
        return pt in self

    @property
    def is_empty(self) -> bool:
        # the boundary is canonical, so a constant is a single explicit value
        return self.boundary.values == (INF,)

    @property
    def is_full(self) -> bool:
        return self.boundary.values == (NEG_INF,)

    @property
    def is_trivial(self) -> bool:
        return self.is_empty or self.is_full

    def __eq__(self, other) -> bool:
        if not isinstance(other, UpperSet2D):
            return NotImplemented
        return self.boundary == other.boundary

    def __hash__(self) -> int:
        return hash(self.boundary)

    def __repr__(self) -> str:
        if self.is_empty:
            return "UpperSet2D(empty)"
        if self.is_full:
            return "UpperSet2D(full)"
        c = self.boundary
        return (
            f"UpperSet2D(b from {c.start}: {list(c.values)}, "
            f"left=({c.left.period},{c.left.step}), right=({c.right.period},{c.right.step}))"
        )

    def issubset(self, other: "UpperSet2D") -> bool:
        """Exact inclusion: b_self >= b_other everywhere."""
        from .sequences import compare_pointwise

        return -1 not in compare_pointwise(self.boundary, other.boundary)

    def __le__(self, other: "UpperSet2D") -> bool:
        return self.issubset(other)

    def __ge__(self, other: "UpperSet2D") -> bool:
        return other.issubset(self)

    def points(self, n0: int, n1: int, m0: int, m1: int) -> set:
        return {(n, m) for n in range(n0, n1 + 1) for m in range(m0, m1 + 1) if (n, m) in self}

    # -- operations -------------------------------------------------------

    def translate(self, dx: int, dy: int) -> "UpperSet2D":
        return UpperSet2D(self.boundary.shift_arg(-dx).add(dy))

    def act(self, action: str, k: int = 1) -> "UpperSet2D":
        try:
            dx, dy = ACTIONS[action]
        except KeyError:
            raise DomainError(f"unknown action {action!r}; expected one of {sorted(ACTIONS)}") from None
        return self.translate(k * dx, k * dy)

    def kink_violation(self):
        """First n with b(n-1) > b(n) + 1, or None."""
        bad = self.boundary.first_violation(lambda a, b: a <= b + 1)
        return None if bad is None else bad + 1

    def is_kinky(self) -> bool:
        return self.kink_violation() is None

    def complement_of_opposite(self) -> "UpperSet2D":
        """Z^2 minus (-U); an involution reversing inclusion."""
        return UpperSet2D(self.boundary.reflect().negate().add(1))


def membership(u: UpperSet2D, pt) -> bool:
    return pt in u


def act(u: UpperSet2D, action: str, k: int = 1) -> UpperSet2D:
    return u.act(action, k)


def is_kinky(u: UpperSet2D) -> bool:
    return u.is_kinky()


# --------------------------------------------------------------------------
# upper sets as monotone families of upper sets of Z


@dataclass(frozen=True)
class ColumnMap:
    """A map j -> UpperSet1D given by the bounds of its values."""

    bounds: QuasiPeriodic

    @classmethod
    def from_columns(cls, start: int, columns: Sequence[UpperSet1D], left: Tail = CONSTANT, right: Tail = CONSTANT):
        return cls(QuasiPeriodic(start, tuple(c.bound for c in columns), left, right))

    def __call__(self, j: int) -> UpperSet1D:
        return UpperSet1D(self.bounds(j))

    def monotonicity_violation(self):
        """A pair j < j+1 with U(j) not contained in U(j+1), or None."""
        bad = self.bounds.first_violation(lambda a, b: a >= b)
        return None if bad is None else (bad, bad + 1)

    def is_perversity_shaped(self) -> bool:
        """U_j + 1 is contained in U_{j-1} for every j."""
        return self.bounds.first_violation(lambda a, b: a <= b + 1) is None


def gamma(columns: ColumnMap) -> UpperSet2D:
    """The graph {(j, j') : j' in U(j)} of a monotone map Z -> O(Z)."""
    bad = columns.monotonicity_violation()
    if bad is not None:
        raise DomainError(f"map is not monotone: U({bad[0]}) is not contained in U({bad[1]})")
    return UpperSet2D(columns.bounds)


def gamma_inverse(u: UpperSet2D) -> ColumnMap:
    return ColumnMap(u.boundary)


# --------------------------------------------------------------------------
# the shear (n, n') -> (n + n', n')


def phi(pt):
    n, m = pt
    return (n + m, m)


def phi_inv(pt):
    n, m = pt
    return (n - m, m)


def psi(pt):
    n, m = pt
    return (-n - m, -m)


def psi_inv(pt):
    n, m = pt
    return (-n + m, -m)


def phi_transform(u: UpperSet2D) -> UpperSet2D:
    """Image of a kinky upper set under phi; an upper set of the product order."""
    bad = u.kink_violation()
    if bad is not None:
        raise DomainError(f"upper set is not kinky: b({bad - 1}) > b({bad}) + 1")
    # column a of the image: n' >= b(a - n')  <=>  h(a - n') <= a  with h(m) = b(m) + m
    h = u.boundary.add_linear(1)
    top = upper_inverse(h)
    return UpperSet2D(top.negate().add_linear(1))


def phi_inverse(v: UpperSet2D) -> UpperSet2D:
    """Preimage under phi; a kinky upper set."""
    # (m, n') lies in the preimage iff k(m + n') >= m with k(a) = a - c(a)
    k = v.boundary.negate().add_linear(1)
    first = lower_inverse(k)
    return UpperSet2D(first.add_linear(-1))


# --------------------------------------------------------------------------
# perversities <-> upper sets


def graph_of_perversity(p: Perversity) -> UpperSet2D:
    """S_p = {(n, n') : n' >= p(n) - n}, a kinky upper set."""
    if p.infinite:
        return UpperSet2D.full() if p.infinite < 0 else UpperSet2D.empty()
    return UpperSet2D(p.to_f())


def perversity_to_upperset(p: Perversity) -> UpperSet2D:
    """phi(S_p).  p_{-inf} -> Z x Z, p_{+inf} -> empty; reverses the order."""
    if p.infinite:
        return UpperSet2D.full() if p.infinite < 0 else UpperSet2D.empty()
    return phi_transform(graph_of_perversity(p))


def upperset_to_perversity_phi(u: UpperSet2D) -> Perversity:
    """Inverse of perversity_to_upperset."""
    if u.is_full:
        return MINUS_INF
    if u.is_empty:
        return PLUS_INF
    f = phi_inverse(u).boundary
    return Perversity.from_f(f)


def perversity_to_upperset_op(p: Perversity) -> UpperSet2D:
    """The complement of psi(S_p), with psi(n, n') = (-n - n', -n').

    p_{-inf} -> empty, p_{+inf} -> Z x Z; preserves the order, and turns
    p -> p - 1 into the northeast shift.
    """
    if p.infinite:
        return UpperSet2D.empty() if p.infinite < 0 else UpperSet2D.full()
    return perversity_to_upperset(p).complement_of_opposite()


def p_u_value(u: UpperSet2D, n: int, hint: int = 0) -> ExtInt:
    """n + min{n' : psi(n, n') not in U}, by direct search on membership.

    The search brackets the answer starting from n' = hint; the result does
    not depend on the hint, only the number of membership tests does.
    """
    if u.is_empty:
        return NEG_INF
    if u.is_full:
        return INF

    def outside(m: int) -> bool:
        return psi((n, m)) not in u

    # psi(n, n'+1) = psi(n, n') - (1, 1), so "outside" is upward closed in n'
    hi, step = hint, 1
    while not outside(hi):
        hi += step
        step *= 2
    lo, step = hint - 1, 1
    while outside(lo):
        lo -= step
        step *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if outside(mid):
            hi = mid
        else:
            lo = mid
    return n + hi


def _hint(value: ExtInt, n: int) -> int:
    return value - n if is_finite(value) else 0


def upperset_to_perversity(u: UpperSet2D) -> Perversity:
    """p_U(n) = n + min{n' : (n, n') not in psi^{-1}(U)}.

    Inverse of perversity_to_upperset_op; the empty set gives p_{-inf} and
    Z x Z gives p_{+inf}.  Values come from the pointwise formula; the tail
    descriptors come from the structural route through phi, and the two are
    compared on the overlap.
    """
    if u.is_empty:
        return MINUS_INF
    if u.is_full:
        return PLUS_INF
    ref = upperset_to_perversity_phi(u.complement_of_opposite()).seq
    seq = QuasiPeriodic.from_function(
        lambda n: p_u_value(u, n, _hint(ref(n), n)), ref.start - ref.margin, ref.end + ref.margin, ref.left, ref.right
    )
    if seq != ref:
        raise AssertionError("pointwise and structural routes disagree")
    return Perversity.from_seq(seq)


# --------------------------------------------------------------------------
# enumeration and windowed checks


def enumerate_uppersets(window: tuple[int, int], value_range: tuple[int, int]) -> list:
    """Upper sets whose boundary is nonincreasing on the window with values in
    value_range u {+-inf}, constant outside the window."""
    n0, n1 = window
    lo, hi = value_range
    levels = [INF] + list(range(hi, lo - 1, -1)) + [NEG_INF]
    out = []

    def extend(prefix, idx):
        if len(prefix) == n1 - n0 + 1:
            out.append(UpperSet2D(QuasiPeriodic(n0, tuple(prefix))))
            return
        for j in range(idx, len(levels)):
            prefix.append(levels[j])
            extend(prefix, j)
            prefix.pop()

    extend([], 0)
    seen, uniq = set(), []
    for u in out:
        if u not in seen:
            seen.add(u)
            uniq.append(u)
    return uniq


def cone_closed(u: UpperSet2D, generators: Iterable, window: tuple[int, int]) -> Verdict:
    """u + g is inside u for each generator g, sampled on window^2."""
    lo, hi = window
    gens = list(generators)
    checked = 0
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            if (n, m) not in u:
                continue
            for g in gens:
                checked += 1
                if (n + g[0], m + g[1]) not in u:
                    return Verdict(False, ((n, m), g), checked)
    return Verdict(True, None, checked)


UPPER_CONE = ((1, 0), (0, 1))
KINKY_CONE = ((1, 0), (-1, 1))


def render_ascii(member: Callable[[tuple], bool], n0: int, n1: int, m0: int, m1: int) -> str:
    rows = []
    for m in range(m1, m0 - 1, -1):
        rows.append("".join("#" if member((n, m)) else "." for n in range(n0, n1 + 1)))
    return "\n".join(rows) + "\n"


def render_svg(member: Callable[[tuple], bool], n0: int, n1: int, m0: int, m1: int, cell: int = 12) -> str:
    w = (n1 - n0 + 1) * cell
    h = (m1 - m0 + 1) * cell
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h + 2 * cell}" '
        f'viewBox="0 0 {w} {h + 2 * cell}">',
        f"<title>window n in [{n0},{n1}], n' in [{m0},{m1}]</title>",
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff" stroke="#888888"/>',
    ]
    for m in range(m1, m0 - 1, -1):
        for n in range(n0, n1 + 1):
            if member((n, m)):
                x = (n - n0) * cell
                y = (m1 - m) * cell
                parts.append(f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="#3366aa"/>')
    parts.append(
        f'<text x="2" y="{h + cell + 2}" font-size="{cell - 2}" font-family="monospace">'
        f"filled: member; n grows rightward, n' upward</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
