"""Radical computations.

Four radicals are computed exactly on finite structures:

- the graded Brown--McCoy radical of an anneid: intersection of the maximal
  right ideals whose contained two-sided part gives a simple regular unital
  quotient;
- the large graded Brown--McCoy radical: intersection of annihilators of
  simple right moduloids (enumerated through quotients by maximal right
  ideals);
- the classical Brown--McCoy radical of a finite ring, computed by two
  independent algorithms whose agreement is asserted;
- the graded Jacobson radical of a regular anneid: intersection of the
  modular maximal right ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import bitset, rings
from .core import (
    DEFAULT_LINEARIZATION_LIMIT,
    FiniteAnneid,
    Verdict,
    component_ring,
    delta_assumption_holds,
    factor_anneid,
    is_regular,
    is_simple_with_unity,
    linearize,
)
from .errors import (
    AlgorithmsDisagree,
    NotIdeal,
    NotRegular,
    PreconditionFailed,
)
from .ideals import (
    TWO_SIDED,
    HomSubset,
    check_of,
    enumerate_ideals,
    maximal_right_ideals,
    modular_unities,
    right_modular_unities,
)
from .moduloids import annihilator, is_simple_moduloid, quotient_moduloid
from .rings import DEFAULT_MAX_IDEALS, FiniteRing


@dataclass(frozen=True)
class Bounds:
    """Size guards for the computations that can blow up."""

    max_linearization: int = DEFAULT_LINEARIZATION_LIMIT
    max_ideals: int = DEFAULT_MAX_IDEALS
    max_span: int = DEFAULT_LINEARIZATION_LIMIT


DEFAULT_BOUNDS = Bounds()


# ---------------------------------------------------------------------------
# classical Brown--McCoy radical of a finite ring


def g_set(ring: FiniteRing, x: int) -> int:
    """Additive subgroup generated by {xy - y} and {yxz - yz}; x is
    G-regular exactly when it lies in its own set."""
    m = ring.order
    ids = np.arange(m, dtype=np.int32)
    first = ring.add[ring.mul[x], ring.neg[ids]]
    first = np.unique(first)
    # y(xz) - yz = y(xz - z) ranges over all products R * first
    second = np.unique(ring.mul[:, first])
    return rings.additive_closure(ring, np.unique(np.concatenate([first, second.ravel()])))


@lru_cache(maxsize=None)
def g_regular_mask(ring: FiniteRing) -> int:
    out = 0
    for x in range(ring.order):
        if bitset.contains(g_set(ring, x), x):
            out |= 1 << x
    return out


def is_g_regular_ring_element(ring: FiniteRing, x: int) -> bool:
    return bitset.contains(g_regular_mask(ring), x)


def brown_mccoy_via_maximal_ideals(ring: FiniteRing,
                                   max_ideals: int = DEFAULT_MAX_IDEALS) -> int:
    """Intersection of maximal two-sided ideals with simple unital quotient
    (the quotient has a unity iff the ideal is modular)."""
    out = ring.full_mask()
    for m in rings.maximal_ring_ideals(ring, max_ideals):
        if rings.ring_modular_unities(ring, m):
            out &= m
    return out


def brown_mccoy_via_g_regularity(ring: FiniteRing,
                                 max_ideals: int = DEFAULT_MAX_IDEALS) -> int:
    """{x : every element of <x> is G-regular}."""
    greg = g_regular_mask(ring)
    out = 0
    for x in range(ring.order):
        if bitset.is_subset(rings.principal_ideal(ring, x), greg):
            out |= 1 << x
    return out


@lru_cache(maxsize=None)
def classical_brown_mccoy(ring: FiniteRing,
                          max_ideals: int = DEFAULT_MAX_IDEALS) -> int:
    a = brown_mccoy_via_maximal_ideals(ring, max_ideals)
    b = brown_mccoy_via_g_regularity(ring, max_ideals)
    if a != b:
        raise AlgorithmsDisagree(
            f"Brown--McCoy algorithms disagree on {ring.name}: "
            f"{ring.label_set(a)} vs {ring.label_set(b)}")
    return a


# ---------------------------------------------------------------------------
# graded radicals of an anneid


@lru_cache(maxsize=None)
def graded_brown_mccoy(anneid: FiniteAnneid,
                       max_ideals: int = DEFAULT_MAX_IDEALS) -> HomSubset:
    """Intersection of maximal right ideals I with A/Ǐ simple regular with
    unity; the whole anneid when no ideal qualifies."""
    out = anneid.full_mask()
    qualifying = False
    for ideal in maximal_right_ideals(anneid, max_ideals):
        checked = check_of(anneid, ideal)
        if is_simple_with_unity(factor_anneid(anneid, checked)).in_class_m:
            out &= ideal.mask
            qualifying = True
    if not qualifying:
        out = anneid.full_mask()
    return HomSubset(anneid, out, TWO_SIDED)


@lru_cache(maxsize=None)
def large_graded_brown_mccoy(anneid: FiniteAnneid,
                             bounds: Bounds = DEFAULT_BOUNDS) -> HomSubset:
    """Intersection of annihilators of the simple quotient moduloids A/I,
    I maximal right; every simple moduloid arises that way because an
    irreducible moduloid is cyclic."""
    out = anneid.full_mask()
    for ideal in maximal_right_ideals(anneid, bounds.max_ideals):
        mod = quotient_moduloid(anneid, ideal.mask)
        if is_simple_moduloid(mod, max_span=bounds.max_span,
                              max_ideals=bounds.max_ideals):
            out &= annihilator(mod).mask
    return HomSubset(anneid, out, TWO_SIDED)


@lru_cache(maxsize=None)
def graded_jacobson(anneid: FiniteAnneid,
                    max_ideals: int = DEFAULT_MAX_IDEALS) -> HomSubset:
    """Intersection of the modular maximal right ideals of a regular anneid."""
    if not is_regular(anneid):
        raise NotRegular(f"{anneid.name} is not regular")
    out = anneid.full_mask()
    for ideal in maximal_right_ideals(anneid, max_ideals):
        if right_modular_unities(anneid, ideal):
            out &= ideal.mask
    return HomSubset(anneid, out, TWO_SIDED)


# ---------------------------------------------------------------------------
# G-regularity inside an anneid


@lru_cache(maxsize=None)
def _anneid_g_regular_mask(anneid: FiniteAnneid, max_ideals: int) -> int:
    full = anneid.full_mask()
    not_greg = 0
    for ideal in enumerate_ideals(anneid, max_ideals):
        if ideal.mask == full:
            continue
        for e in modular_unities(anneid, ideal):
            not_greg |= 1 << e
    return full & ~not_greg


def is_g_regular_anneid_element(anneid: FiniteAnneid, x: int,
                                max_ideals: int = DEFAULT_MAX_IDEALS) -> bool:
    """No proper two-sided ideal admits x as a unity modulo it."""
    return bitset.contains(_anneid_g_regular_mask(anneid, max_ideals), x)


def g_regular_characterization_check(anneid: FiniteAnneid,
                                     max_ideals: int = DEFAULT_MAX_IDEALS) -> Verdict:
    """Elementwise test: G-regular in the anneid iff the degree is not
    idempotent or the element is G-regular in its component ring."""
    if not is_regular(anneid):
        raise PreconditionFailed(f"{anneid.name} is not regular")
    if not delta_assumption_holds(anneid.grades):
        raise PreconditionFailed(
            f"grade groupoid of {anneid.name} violates the idempotent-product assumption")
    for x in range(anneid.n):
        lhs = is_g_regular_anneid_element(anneid, x, max_ideals)
        g = anneid.deg(x)
        if not anneid.grades.is_idempotent(g):
            rhs = True
        else:
            ring = component_ring(anneid, g)
            rhs = is_g_regular_ring_element(ring, ring.anneid_ids.index(x))
        if lhs != rhs:
            return Verdict(False, (x, lhs, rhs))
    return Verdict(True)


# ---------------------------------------------------------------------------
# homogeneous parts of ring ideals


def largest_homogeneous_ideal_in(ring: FiniteRing, ring_ideal: int) -> HomSubset:
    """Homogeneous members of a two-sided ring ideal of a linearization,
    pulled back to the anneid; asserted to be a two-sided anneid ideal."""
    if ring.grading is None:
        raise ValueError(f"{ring.name} carries no grading")
    if not rings.is_ring_ideal(ring, ring_ideal):
        raise NotIdeal(f"{ring.label_set(ring_ideal)} is not an ideal of {ring.name}")
    anneid = ring.grading.anneid
    mask = 1
    for aid, rid in enumerate(ring.grading.hom_to_ring):
        if bitset.contains(ring_ideal, rid):
            mask |= 1 << aid
    try:
        return HomSubset(anneid, mask, TWO_SIDED)
    except Exception as exc:  # pragma: no cover - consistency failure
        raise NotIdeal(str(exc)) from exc


def homogeneous_intersection(ring: FiniteRing, ring_mask: int) -> int:
    """Anneid mask of the homogeneous elements lying in a ring subset."""
    if ring.grading is None:
        raise ValueError(f"{ring.name} carries no grading")
    mask = 1
    for aid, rid in enumerate(ring.grading.hom_to_ring):
        if bitset.contains(ring_mask, rid):
            mask |= 1 << aid
    return mask


# ---------------------------------------------------------------------------
# the combined report


@dataclass(frozen=True)
class RadicalReport:
    anneid: FiniteAnneid
    graded: HomSubset
    large_graded: HomSubset
    jacobson: HomSubset | None
    linearization: FiniteRing | None
    linearization_radical: int | None
    component_radicals: tuple[tuple[int, int], ...]  # (grade, ring mask)
    regular: bool
    delta_assumption: bool
    strongly_graded: bool
    has_unity: bool | None

    def to_dict(self) -> dict:
        a = self.anneid
        out = {
            "anneid": a.name,
            "flags": {
                "regular": self.regular,
                "delta_assumption": self.delta_assumption,
                "strongly_graded": self.strongly_graded,
                "unity": self.has_unity,
            },
            "graded_brown_mccoy": a.label_set(self.graded.mask),
            "large_graded_brown_mccoy": a.label_set(self.large_graded.mask),
        }
        if self.jacobson is not None:
            out["graded_jacobson"] = a.label_set(self.jacobson.mask)
        if self.linearization is not None:
            out["linearization_order"] = self.linearization.order
            out["classical_brown_mccoy"] = self.linearization.label_set(
                self.linearization_radical)
        comps = {}
        for grade, mask in self.component_radicals:
            ring = component_ring(a, grade)
            key = "+".join(a.labels[e] for e in a.block_elems(grade))
            comps[key] = ring.label_set(mask)
        out["component_radicals"] = comps
        return out


def radical_report(anneid: FiniteAnneid, bounds: Bounds = DEFAULT_BOUNDS) -> RadicalReport:
    from .core import is_strongly_graded, unity_criterion

    regular = bool(is_regular(anneid))
    graded = graded_brown_mccoy(anneid, bounds.max_ideals)
    large = large_graded_brown_mccoy(anneid, bounds)
    jac = graded_jacobson(anneid, bounds.max_ideals) if regular else None

    lin = linearize(anneid, bounds.max_linearization)
    lin_radical = classical_brown_mccoy(lin, bounds.max_ideals)
    if regular:
        unity = unity_criterion(anneid, size_limit=bounds.max_linearization)
    else:
        unity = rings.ring_unity(lin) is not None

    comps = []
    for eps in sorted(anneid.grades.idempotents):
        ring = component_ring(anneid, eps)
        comps.append((eps, classical_brown_mccoy(ring, bounds.max_ideals)))

    return RadicalReport(
        anneid=anneid,
        graded=graded,
        large_graded=large,
        jacobson=jac,
        linearization=lin,
        linearization_radical=lin_radical,
        component_radicals=tuple(comps),
        regular=regular,
        delta_assumption=bool(delta_assumption_holds(anneid.grades)),
        strongly_graded=is_strongly_graded(anneid),
        has_unity=unity,
    )
