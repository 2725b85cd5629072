"""Slice-label systems and orthogonality oracles.

A slicing is modelled at the level of its labels: an oracle answers whether
the slice labelled x is orthogonal to the slice labelled y shifted by n
(every morphism from D_x to D_y[n] vanishes).  The compatibility,
gluability, grading and perversity predicates, the support-level
pushforward f_!, and the t-structures attached to perversities are all
phrased in terms of such an oracle and are evaluated on finite windows.

Labels of Z x_lex Zhat are pairs (n, phi) standing for the slice
heart_phi[n] of an abelian Z-slicing of a heart.  For two such labels,
Hom(heart_phi[a], heart_psi[b][k]) = Ext^(b + k - a)(heart_phi, heart_psi).
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from .perversity import Perversity
from .sequences import INF, NEG_INF
from .zposet import (
    Z,
    ZHAT,
    DomainError,
    FiniteInterval,
    LexProduct,
    Verdict,
    ZSetMap,
    ZToset,
    compose,
    exchange,
    g_p,
)

DEFAULT_SHIFTS = (-8, 8)


class IncompatibleError(DomainError):
    """A map is not compatible with the slicing; carries the offending pair."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(DomainError):
    """A hypothesis of an operation fails on the checked window."""


# --------------------------------------------------------------------------
# oracles


class OrthogonalityOracle:
    """Base class.  `raw(x, y, n)` answers "D_x is orthogonal to D_y[n]"
    beyond the slicing axiom, which `orthogonal` applies first: if x is
    strictly above y + n the answer is always yes."""

    index: ZToset = Z
    name = "oracle"
    enforce_baseline = True

    def raw(self, x, y, n: int) -> bool:
        raise NotImplementedError

    def _check_label(self, x):
        if not self.index.contains(x):
            raise DomainError(f"label {x!r} is outside the label space {self.index} of {self.name}")

    def orthogonal(self, x, y, n: int = 0) -> bool:
        self._check_label(x)
        self._check_label(y)
        if self.enforce_baseline and x > self.index.shift(y, n):
            return True
        return bool(self.raw(x, y, n))

    def baseline_violation(self, labels: Iterable, shifts: Iterable[int]) -> Verdict:
        """Look for x > y + n with D_x not orthogonal to D_y[n]."""
        labels = list(labels)
        checked = 0
        for x, y in itertools.product(labels, repeat=2):
            for n in shifts:
                if x > self.index.shift(y, n):
                    checked += 1
                    if not self.orthogonal(x, y, n):
                        return Verdict(False, {"pair": [x, y], "shift": n}, checked)
        return Verdict(True, None, checked)

    def shift_invariance_violation(self, labels: Iterable, shifts: Iterable[int]) -> Verdict:
        """orthogonal(x+1, y+1, n) == orthogonal(x, y, n) on the given labels."""
        checked = 0
        labels = list(labels)
        for x, y in itertools.product(labels, repeat=2):
            for n in shifts:
                checked += 1
                a = self.orthogonal(x, y, n)
                b = self.orthogonal(self.index.shift(x, 1), self.index.shift(y, 1), n)
                if a != b:
                    return Verdict(False, {"pair": [x, y], "shift": n}, checked)
        return Verdict(True, None, checked)


class HeartOracle(OrthogonalityOracle):
    """An abelian Z-slicing of a heart, described by Ext vanishing between
    its slices.  Subclasses implement `ext_vanishes(phi, psi, d)` for d >= 0;
    negative Ext groups, and Hom from a higher slice to a lower one, vanish
    automatically."""

    weights: ZToset = ZHAT

    @property
    def index(self) -> LexProduct:
        return LexProduct(Z, self.weights)

    def ext_vanishes(self, phi: int, psi: int, d: int) -> bool:
        raise NotImplementedError

    def raw(self, x, y, n):
        return self.ext_vanishes(x[1], y[1], y[0] + n - x[0])

    def heart_orthogonal(self, phi: int, psi: int, d: int) -> bool:
        """heart_phi orthogonal to heart_psi[d]."""
        return self.orthogonal((0, phi), (0, psi), d)

    def weight_window(self, window: tuple[int, int]) -> list:
        return self.weights.window(*window)


@dataclass(frozen=True)
class SemisimpleHeart(HeartOracle):
    """Only Hom in degree 0 between equal labels."""

    weights: ZToset = ZHAT
    name: str = "semisimple"

    def ext_vanishes(self, phi, psi, d):
        return not (d == 0 and phi == psi)


@dataclass(frozen=True)
class KoszulHeart(HeartOracle):
    """Graded modules over a Koszul algebra: Ext^d(M_phi, M_psi) = 0 for d > psi - phi."""

    weights: ZToset = ZHAT
    name: str = "koszul"

    def ext_vanishes(self, phi, psi, d):
        return d > psi - phi


@dataclass(frozen=True)
class CoherentSupportHeart(HeartOracle):
    """Coherent sheaves graded by codimension of support on a smooth projective
    variety of dimension `dim`: Ext^d vanishes for d < phi - psi and for d > dim.
    Everything else is treated as possibly nonzero."""

    dim: int = 2
    name: str = "coherent-support"

    def __post_init__(self):
        if self.dim < 0:
            raise DomainError("dimension must be nonnegative")

    @property
    def weights(self):
        return FiniteInterval(0, self.dim)

    def ext_vanishes(self, phi, psi, d):
        return d < phi - psi or d > self.dim


@dataclass(frozen=True)
class FunctionHeart(HeartOracle):
    """A heart oracle given by an arbitrary rule (phi, psi, d) -> vanishes."""

    rule: Callable[[int, int, int], bool] = field(compare=False, default=lambda a, b, d: True)
    weights: ZToset = ZHAT
    name: str = "function"

    def ext_vanishes(self, phi, psi, d):
        return bool(self.rule(phi, psi, d))


def _baseline_forces(phi: int, psi: int, d: int) -> bool:
    return d < 0 or (d == 0 and phi > psi)


class HeartTable(HeartOracle):
    """Finite table of Ext-vanishing facts on a contiguous set of weights.

    `entries` maps (phi, psi, d) to True (vanishes) or False (nonzero).
    Triples not listed fall back to `default_vanishes`.  An entry claiming a
    nonzero group where the slicing axioms force vanishing is rejected.
    """

    name = "table"

    def __init__(self, labels: Iterable[int], default_vanishes: bool = False, entries: Mapping | None = None):
        labels = sorted(set(labels))
        if not labels:
            raise DomainError("a table needs at least one label")
        if labels != list(range(labels[0], labels[-1] + 1)):
            raise DomainError(f"table labels must be a contiguous range of integers, got {labels}")
        self.labels = tuple(labels)
        self.weights = FiniteInterval(labels[0], labels[-1])
        self.default_vanishes = bool(default_vanishes)
        self.entries = {}
        for key, value in (entries or {}).items():
            phi, psi, d = (int(v) for v in key)
            for w in (phi, psi):
                if not self.weights.contains(w):
                    raise DomainError(f"entry {key}: label {w} not in {self.weights}")
            if not value and _baseline_forces(phi, psi, d):
                raise DomainError(
                    f"entry {key} claims a nonzero group where the slicing axioms force vanishing"
                )
            self.entries[(phi, psi, d)] = bool(value)

    def ext_vanishes(self, phi, psi, d):
        return self.entries.get((phi, psi, d), self.default_vanishes)

    def __repr__(self):
        return f"HeartTable(labels={list(self.labels)}, default_vanishes={self.default_vanishes}, entries={len(self.entries)})"


def torsion_pair_table() -> HeartTable:
    """Two slices {0, 1} coming from a torsion pair: only Hom(heart_1, heart_0) is
    known to vanish, which the slicing axiom already encodes."""
    return HeartTable([0, 1], default_vanishes=False, entries={})


class BaricOracle(OrthogonalityOracle):
    """A Zhat x_lex Z slicing: a baric structure (semiorthogonal pieces D_i)
    with a bounded t-structure on each piece.  Label (i, k) is D_i^heart[k].
    Subclasses implement `baric_vanishes(i, j, d)` for Hom(D_i^heart, D_j^heart[d])."""

    baric: ZToset = ZHAT

    @property
    def index(self) -> LexProduct:
        return LexProduct(self.baric, Z)

    def baric_vanishes(self, i: int, j: int, d: int) -> bool:
        raise NotImplementedError

    def raw(self, x, y, n):
        return self.baric_vanishes(x[0], y[0], y[1] + n - x[1])


@dataclass(frozen=True)
class BeilinsonSoule(BaricOracle):
    """Mixed Tate motives: Hom(Q(i), Q(j)[n]) = K_{2(j-i)-n}^{(j-i)}.

    The K-groups are not computed.  For i < j, K_a^{(w)} with w = j - i is
    zero when a < 0 or a = 0; for n <= 0 its vanishing is the `vanishing`
    flag; otherwise it is treated as nonzero.  `planted` lists (w, n) pairs
    forced to be nonzero.
    """

    vanishing: bool = True
    planted: frozenset = frozenset()
    name: str = "beilinson-soule"

    def baric_vanishes(self, i, j, d):
        if i > j:
            return True
        if i == j:
            return d != 0
        w = j - i
        if (w, d) in self.planted:
            return False
        a = 2 * w - d
        if a <= 0:
            return True
        if d <= 0:
            return self.vanishing
        return False


def number_field() -> BeilinsonSoule:
    """Preset: the vanishing pattern is known over a number field."""
    return BeilinsonSoule(vanishing=True)


class BaricTable(BaricOracle):
    """Finite table for a baric structure on contiguous labels; entries map
    (i, j, d) to True (vanishes) or False."""

    name = "baric-table"

    def __init__(self, labels: Iterable[int], default_vanishes: bool = False, entries: Mapping | None = None):
        labels = sorted(set(labels))
        if not labels or labels != list(range(labels[0], labels[-1] + 1)):
            raise DomainError(f"baric labels must be a nonempty contiguous range, got {labels}")
        self.labels = tuple(labels)
        self.baric = FiniteInterval(labels[0], labels[-1])
        self.default_vanishes = bool(default_vanishes)
        self.entries = {}
        for key, value in (entries or {}).items():
            i, j, d = (int(v) for v in key)
            if not value and (i > j or (i == j and d < 0)):
                raise DomainError(f"entry {key} contradicts semiorthogonality")
            self.entries[(i, j, d)] = bool(value)

    def baric_vanishes(self, i, j, d):
        if i > j or (i == j and d < 0):
            return True
        return self.entries.get((i, j, d), self.default_vanishes)


class TransportOracle(OrthogonalityOracle):
    """The slicing g_* t for a bijection g of label sets: D'_{g(x)} = D_x.

    No baseline is imposed, so a transport along a non-monotone bijection
    reports exactly what the original slicing says."""

    enforce_baseline = False

    def __init__(self, inner: OrthogonalityOracle, forward: ZSetMap, backward: ZSetMap, name: str | None = None):
        self.inner = inner
        self.forward = forward
        self.backward = backward
        self.index = forward.codomain
        self.name = name or f"{forward.name}_*({inner.name})"

    def raw(self, x, y, n):
        return self.inner.orthogonal(self.backward(x), self.backward(y), n)


class PushforwardOracle(OrthogonalityOracle):
    """Slices of f_! t: D_j = <D_phi>_{f(phi)=j}, with fibres cut to a window."""

    enforce_baseline = False

    def __init__(self, inner: OrthogonalityOracle, f: ZSetMap, window: Iterable):
        self.inner = inner
        self.f = f
        self.index = f.codomain
        self.name = f"{f.name}_!({inner.name})"
        fibres: dict = {}
        for x in window:
            if f.defined_at(x):
                fibres.setdefault(f(x), []).append(x)
        self.fibres = fibres

    def raw(self, j, k, n):
        return all(
            self.inner.orthogonal(a, b, n) for a in self.fibres.get(j, ()) for b in self.fibres.get(k, ())
        )


def exchanged(oracle: OrthogonalityOracle) -> TransportOracle:
    """e_* of a slicing indexed by a lexicographic product."""
    t = oracle.index
    if not isinstance(t, LexProduct):
        raise DomainError("the exchange needs a lexicographic product index")
    return TransportOracle(oracle, exchange(t.left, t.right), exchange(t.right, t.left))


# --------------------------------------------------------------------------
# objects at support level


@dataclass(frozen=True)
class SupportObject:
    """Labels where the cohomology of an object is nonzero, with multiplicities,
    in strictly decreasing label order."""

    entries: tuple = ()

    def __post_init__(self):
        merged: Counter = Counter()
        for label, mult in self.entries:
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise DomainError(f"multiplicity of {label!r} must be a positive integer, got {mult!r}")
            merged[label] += mult
        object.__setattr__(self, "entries", tuple(sorted(merged.items(), reverse=True)))

    @classmethod
    def of(cls, labels: Iterable) -> "SupportObject":
        """Each occurrence of a label counts once."""
        return cls(tuple((x, 1) for x in labels))

    @property
    def labels(self) -> list:
        return [x for x, _ in self.entries]

    def multiplicity(self, label) -> int:
        return dict(self.entries).get(label, 0)

    def __len__(self):
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries


# --------------------------------------------------------------------------
# compatibility


def _sorted_labels(window: Iterable) -> list:
    return sorted(set(window))


def is_f_compatible(s: OrthogonalityOracle, f: ZSetMap, window: Iterable) -> Verdict:
    """Whenever x <= y in the window but f(x) > f(y), D_x must be orthogonal to
    both D_y and D_y[1].  The witness names the first failing pair and shift."""
    labels = _sorted_labels(window)
    images = []
    for x in labels:
        if not s.index.contains(x):
            raise DomainError(f"label {x!r} is outside the label space {s.index}")
        if not f.defined_at(x):
            raise DomainError(f"{f.name} is not defined at label {x!r}")
        images.append(f(x))
    checked = 0
    for i, x in enumerate(labels):
        fx = images[i]
        for j in range(i, len(labels)):
            if fx > images[j]:
                y = labels[j]
                for n in (0, 1):
                    checked += 1
                    if not s.orthogonal(x, y, n):
                        return Verdict(False, {"pair": [x, y], "images": [fx, images[j]], "shift": n}, checked)
    return Verdict(True, None, checked)


def _weights(s: HeartOracle, window) -> list:
    if isinstance(window, tuple) and len(window) == 2 and all(isinstance(v, int) for v in window):
        return s.weight_window(window)
    return sorted(set(window))


def _shift_range(shifts) -> range:
    lo, hi = shifts
    return range(lo, hi + 1)


def _heart_scan(s: HeartOracle, weights, shifts, condition) -> Verdict:
    checked = 0
    for phi in weights:
        for psi in weights:
            for n in _shift_range(shifts):
                if condition(phi, psi, n):
                    checked += 1
                    if not s.heart_orthogonal(phi, psi, n):
                        return Verdict(False, {"phi": phi, "psi": psi, "shift": n}, checked)
    return Verdict(True, None, checked)


def gluable_via_exchange(s: HeartOracle, weights, max_shift: int) -> Verdict:
    """e-compatibility of the Z x_lex Zhat slicing on degrees [0, max_shift - 1]."""
    if max_shift < 1:
        return Verdict(True, None, 0)
    labels = [(a, phi) for a in range(max_shift) for phi in weights]
    return is_f_compatible(s, exchange(Z, s.weights), labels)


def is_gluable(s: HeartOracle, window=(-4, 4), shifts=DEFAULT_SHIFTS, cross_check: bool = True) -> Verdict:
    """heart_phi orthogonal to heart_psi[n] whenever phi > psi and n > 0.

    With `cross_check`, the answer is compared with e-compatibility on the
    degree window that consults exactly the same shifts."""
    weights = _weights(s, window)
    verdict = _heart_scan(s, weights, shifts, lambda phi, psi, n: phi > psi and n > 0)
    if cross_check:
        other = gluable_via_exchange(s, weights, shifts[1])
        if bool(other) != bool(verdict):
            raise AssertionError(f"gluability and e-compatibility disagree: {verdict} vs {other}")
    return verdict


def is_perverse(s: HeartOracle, window=(-4, 4), shifts=DEFAULT_SHIFTS) -> Verdict:
    """heart_phi orthogonal to heart_psi[n] whenever phi > psi + n."""
    return _heart_scan(s, _weights(s, window), shifts, lambda phi, psi, n: phi > psi + n)


def is_grading(s: HeartOracle, window=(-4, 4), shifts=DEFAULT_SHIFTS) -> Verdict:
    """Perverse, and also orthogonal when phi = psi + n with n >= 2."""
    return _heart_scan(
        s,
        _weights(s, window),
        shifts,
        lambda phi, psi, n: phi > psi + n or (phi == psi + n and n >= 2),
    )


def is_baric_gluable(s: BaricOracle, window=(-4, 4), shifts=DEFAULT_SHIFTS, cross_check: bool = True) -> Verdict:
    """D_i^heart orthogonal to D_j^heart[n] whenever i < j and n <= 0."""
    lo, hi = window
    labels = s.baric.window(lo, hi)

    def scan() -> Verdict:
        checked = 0
        for i in labels:
            for j in labels:
                if i >= j:
                    continue
                for n in range(shifts[0], min(0, shifts[1]) + 1):
                    checked += 1
                    if not s.orthogonal((i, 0), (j, 0), n):
                        return Verdict(False, {"i": i, "j": j, "shift": n}, checked)
        return Verdict(True, None, checked)

    verdict = scan()
    if cross_check and -shifts[0] >= 1:
        # degrees k in [0, K], l in [0, K] consult d = l - k and l - k + 1 in [-K, 1]
        K = -shifts[0]
        pts = [(i, k) for i in labels for k in range(K + 1)]
        t = s.index
        other = is_f_compatible(s, exchange(t.left, t.right), pts)
        if bool(other) != bool(verdict):
            raise AssertionError(f"baric gluability and e-compatibility disagree: {verdict} vs {other}")
    return verdict


@dataclass(frozen=True)
class ImplicationReport:
    gluable: Verdict
    grading: Verdict
    perverse: Verdict
    window: tuple
    shifts: tuple

    @property
    def consistent(self) -> bool:
        return (not self.gluable or bool(self.grading)) and (not self.grading or bool(self.perverse))

    def as_dict(self) -> dict:
        def one(v: Verdict):
            return {"holds": v.holds, "witness": v.witness, "checked": v.checked}

        return {
            "window": list(self.window),
            "shifts": list(self.shifts),
            "gluable": one(self.gluable),
            "grading": one(self.grading),
            "perverse": one(self.perverse),
            "implications_hold": self.consistent,
        }


def implication_check(s: HeartOracle, window=(-4, 4), shifts=DEFAULT_SHIFTS) -> ImplicationReport:
    """Evaluate the three predicates; gluable => grading => perverse must hold."""
    report = ImplicationReport(
        is_gluable(s, window, shifts),
        is_grading(s, window, shifts),
        is_perverse(s, window, shifts),
        tuple(window) if isinstance(window, tuple) else tuple(sorted(set(window))),
        tuple(shifts),
    )
    if not report.consistent:
        raise AssertionError(f"implication ladder broken on {s}: {report.as_dict()}")
    return report


def gp_compatible(s: HeartOracle, p: Perversity, degrees=(-2, 2), weights=(-4, 4)) -> Verdict:
    """g_p-compatibility on the labels (n, phi) with n in degrees, phi in weights."""
    ws = _weights(s, weights)
    labels = [(n, phi) for n in range(degrees[0], degrees[1] + 1) for phi in ws]
    return is_f_compatible(s, g_p(p), labels)


# --------------------------------------------------------------------------
# pushforward


def pushforward_support(s: OrthogonalityOracle, f: ZSetMap, x: SupportObject, check: bool = True) -> SupportObject:
    """Support of the f_! t cohomology of an object with support x."""
    if check:
        v = is_f_compatible(s, f, x.labels)
        if not v:
            raise IncompatibleError(f"{s.name} is not {f.name}-compatible on the support", v.witness)
    return SupportObject(tuple((f(label), mult) for label, mult in x.entries))


def pushforward_system(s: OrthogonalityOracle, f: ZSetMap, window: Iterable) -> PushforwardOracle:
    return PushforwardOracle(s, f, window)


def slice_labels(f: ZSetMap, j, window: Iterable, below: bool | None = None) -> set:
    """Labels of the window mapped to j (below=None), to <= j (True) or to >= j (False)."""
    out = set()
    for x in window:
        y = f(x)
        if (below is None and y == j) or (below is True and y <= j) or (below is False and y >= j):
            out.add(x)
    return out


def functoriality_check(
    s: OrthogonalityOracle, f: ZSetMap, g: ZSetMap, window: Iterable, supports: Iterable[SupportObject]
) -> Verdict:
    """(g o f)_! = g_! f_! on the given supports, plus (g o f)-compatibility.

    Raises PreconditionError when s is not f-compatible on the window or
    f_! s is not g-compatible on the image of the window."""
    window = _sorted_labels(window)
    v = is_f_compatible(s, f, window)
    if not v:
        raise PreconditionError(f"precondition: not {f.name}-compatible, witness {v.witness}")
    pushed = pushforward_system(s, f, window)
    image = sorted({f(x) for x in window})
    v = is_f_compatible(pushed, g, image)
    if not v:
        raise PreconditionError(f"precondition: f_! is not {g.name}-compatible, witness {v.witness}")
    gf = compose(g, f)
    checked = 0
    v = is_f_compatible(s, gf, window)
    if not v:
        return Verdict(False, {"composite_incompatible": v.witness}, v.checked)
    for x in supports:
        checked += 1
        lhs = pushforward_support(s, gf, x, check=False)
        rhs = pushforward_support(pushed, g, pushforward_support(s, f, x, check=False), check=False)
        if lhs != rhs:
            return Verdict(False, {"support": x.entries, "composite": lhs.entries, "iterated": rhs.entries}, checked)
    return Verdict(True, None, checked)


# --------------------------------------------------------------------------
# perverse hearts and the map into t-structures


def perverse_heart_membership(p: Perversity, x: SupportObject) -> Verdict:
    """Every label (n, n') of the support must satisfy p(n') = -n."""
    checked = 0
    for (n, m), _ in x.entries:
        checked += 1
        if p(m) != -n:
            return Verdict(False, (n, m), checked)
    return Verdict(True, None, checked)


def tilt_heart_membership(k: int, x: SupportObject) -> Verdict:
    """Tilt of the heart by the torsion pair T = weights >= k, F = weights < k,
    normalised so that F sits in cohomological degree 0 and T in degree 1.

    The label (n, w) carries cohomology in degree -n."""
    checked = 0
    for (n, w), _ in x.entries:
        checked += 1
        degree = -n
        ok = (degree == 0 and w < k) or (degree == 1 and w >= k)
        if not ok:
            return Verdict(False, (n, w), checked)
    return Verdict(True, None, checked)


@dataclass(frozen=True)
class TStructureDescriptor:
    """The t-structure (gamma_p)_! t shifted by [shift], as label classifiers.

    A label (n, phi) lies in the upper class iff n - shift + p(phi) >= 0.
    """

    perversity: Perversity
    shift: int = 0

    def gamma(self, label):
        n, phi = label
        return n - self.shift + self.perversity(phi)

    def upper(self, label) -> bool:
        return self.gamma(label) >= 0

    def lower(self, label) -> bool:
        return self.gamma(label) < 0

    def heart(self, label) -> bool:
        return self.gamma(label) == 0

    def shifted(self, k: int) -> "TStructureDescriptor":
        """The t-structure with upper class D_{>=0}[k]."""
        return TStructureDescriptor(self.perversity, self.shift + k)

    def classify(self, x: SupportObject) -> dict:
        return {
            "upper": all(self.upper(lbl) for lbl in x.labels),
            "lower": all(self.lower(lbl) for lbl in x.labels),
            "heart": all(self.heart(lbl) for lbl in x.labels),
        }

    def heart_labels(self, degrees: tuple[int, int], weights: tuple[int, int]) -> set:
        return {
            (n, w)
            for n in range(degrees[0], degrees[1] + 1)
            for w in range(weights[0], weights[1] + 1)
            if self.heart((n, w))
        }

    @property
    def is_degenerate(self) -> bool:
        return bool(self.perversity.infinite)


def psi(s: HeartOracle, arg, window=(-4, 4), shifts=DEFAULT_SHIFTS) -> TStructureDescriptor:
    """The t-structure attached to a perversity or an upper set of Z x Z.

    Requires the slicing to be grading on the window; a merely perverse
    slicing is accepted for strict perversities only.  When neither can be
    confirmed a warning is issued and the descriptor is still returned.
    """
    from .upperset import UpperSet2D, upperset_to_perversity

    if isinstance(arg, UpperSet2D):
        p = upperset_to_perversity(arg)
    elif isinstance(arg, Perversity):
        p = arg
    else:
        raise DomainError(f"psi expects a Perversity or an UpperSet2D, got {type(arg).__name__}")
    if not is_grading(s, window, shifts):
        if is_perverse(s, window, shifts):
            if p.is_finite and not p.is_strict():
                raise PreconditionError(
                    f"{s.name} is perverse but not grading on the window; {p} is not strict "
                    f"(fails at n={p.strict_violation()})"
                )
        else:
            warnings.warn(
                f"{s.name}: neither grading nor perverse on the window; the descriptor may not be a t-structure",
                stacklevel=2,
            )
    return TStructureDescriptor(p)


__all__ = [
    "DEFAULT_SHIFTS",
    "IncompatibleError",
    "PreconditionError",
    "OrthogonalityOracle",
    "HeartOracle",
    "SemisimpleHeart",
    "KoszulHeart",
    "CoherentSupportHeart",
    "FunctionHeart",
    "HeartTable",
    "torsion_pair_table",
    "BaricOracle",
    "BeilinsonSoule",
    "number_field",
    "BaricTable",
    "TransportOracle",
    "PushforwardOracle",
    "exchanged",
    "SupportObject",
    "is_f_compatible",
    "is_gluable",
    "is_grading",
    "is_perverse",
    "is_baric_gluable",
    "gluable_via_exchange",
    "ImplicationReport",
    "implication_check",
    "gp_compatible",
    "pushforward_support",
    "pushforward_system",
    "slice_labels",
    "functoriality_check",
    "perverse_heart_membership",
    "tilt_heart_membership",
    "TStructureDescriptor",
    "psi",
]
