"""Right and two-sided ideals of a finite anneid.

The lattice is generated by joining principal ideals; a brute-force subset
scan over small anneids is kept in the test suite as the oracle for that
claim.  Subsets live as int bitmasks wrapped in HomSubset, which validates
its closure properties on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import bitset
from .core import FiniteAnneid, component_ring, is_regular
from .errors import (
    DegreesDiffer,
    LatticeTooLarge,
    NotIdempotent,
    NotModular,
    NotRegular,
    NotRightIdeal,
    NotTwoSidedIdeal,
    ConsistencyError,
)
from .rings import DEFAULT_MAX_IDEALS

SUBANNEID = "subanneid"
RIGHT_IDEAL = "right-ideal"
TWO_SIDED = "two-sided-ideal"


@dataclass(frozen=True)
class HomSubset:
    """A homogeneous subset of an anneid with a declared closure role."""

    anneid: FiniteAnneid
    mask: int
    kind: str

    def __post_init__(self):
        if self.kind == SUBANNEID:
            ok = self.anneid.is_subanneid_mask(self.mask)
            err = NotRightIdeal  # closest in spirit; never raised in practice
        elif self.kind == RIGHT_IDEAL:
            ok = self.anneid.is_right_ideal_mask(self.mask)
            err = NotRightIdeal
        elif self.kind == TWO_SIDED:
            ok = self.anneid.is_two_sided_mask(self.mask)
            err = NotTwoSidedIdeal
        else:
            raise ValueError(f"unknown HomSubset kind {self.kind!r}")
        if not ok:
            raise err(
                f"{set(self.anneid.label_set(self.mask))} is not a {self.kind} "
                f"of {self.anneid.name}")

    def members(self) -> list[int]:
        return bitset.member_list(self.mask)

    def labels(self) -> list[str]:
        return self.anneid.label_set(self.mask)

    def __contains__(self, elem: int) -> bool:
        return bitset.contains(self.mask, elem)

    def __le__(self, other: "HomSubset") -> bool:
        return bitset.is_subset(self.mask, other.mask)

    @property
    def is_proper(self) -> bool:
        return self.mask != self.anneid.full_mask()

    @property
    def is_zero(self) -> bool:
        return self.mask == 1

    def __repr__(self) -> str:
        return f"HomSubset({self.anneid.name}, {{{', '.join(self.labels())}}}, {self.kind})"


def _mask(ideal) -> int:
    return getattr(ideal, "mask", ideal)


def principal_right_ideal(anneid: FiniteAnneid, a: int) -> HomSubset:
    return HomSubset(anneid, anneid.principal_right_masks[a], RIGHT_IDEAL)


def principal_ideal(anneid: FiniteAnneid, a: int) -> HomSubset:
    return HomSubset(anneid, anneid.principal_masks[a], TWO_SIDED)


def _join(anneid: FiniteAnneid, a: int, b: int) -> int:
    return anneid.additive_span(bitset.members(a | b))


def _join_closure(anneid, principals, max_count) -> tuple[int, ...]:
    seen = {1}
    seen.update(principals)
    frontier = list(seen)
    while frontier:
        if len(seen) > max_count:
            raise LatticeTooLarge(len(seen), max_count)
        fresh = []
        for i in frontier:
            for p in principals:
                if bitset.is_subset(p, i):
                    continue
                j = _join(anneid, i, p)
                if j not in seen:
                    seen.add(j)
                    fresh.append(j)
                    if len(seen) > max_count:
                        raise LatticeTooLarge(len(seen), max_count)
        frontier = fresh
    return tuple(sorted(seen, key=lambda m: (bitset.popcount(m), m)))


@lru_cache(maxsize=None)
def _right_masks(anneid: FiniteAnneid, max_count: int) -> tuple[int, ...]:
    return _join_closure(anneid, anneid.principal_right_masks, max_count)


@lru_cache(maxsize=None)
def _two_sided_masks(anneid: FiniteAnneid, max_count: int) -> tuple[int, ...]:
    return _join_closure(anneid, anneid.principal_masks, max_count)


def enumerate_right_ideals(anneid, max_count: int = DEFAULT_MAX_IDEALS):
    return tuple(HomSubset(anneid, m, RIGHT_IDEAL) for m in _right_masks(anneid, max_count))


def enumerate_ideals(anneid, max_count: int = DEFAULT_MAX_IDEALS):
    return tuple(HomSubset(anneid, m, TWO_SIDED) for m in _two_sided_masks(anneid, max_count))


def _maximal(masks, full):
    proper = [m for m in masks if m != full]
    return tuple(
        m for m in proper
        if not any(m != o and bitset.is_subset(m, o) for o in proper)
    )


def maximal_right_ideals(anneid, max_count: int = DEFAULT_MAX_IDEALS):
    masks = _maximal(_right_masks(anneid, max_count), anneid.full_mask())
    return tuple(HomSubset(anneid, m, RIGHT_IDEAL) for m in masks)


def maximal_ideals(anneid, max_count: int = DEFAULT_MAX_IDEALS):
    masks = _maximal(_two_sided_masks(anneid, max_count), anneid.full_mask())
    return tuple(HomSubset(anneid, m, TWO_SIDED) for m in masks)


# ---------------------------------------------------------------------------
# the largest two-sided ideal inside a right ideal


def check_of(anneid: FiniteAnneid, right_ideal) -> HomSubset:
    """Largest two-sided ideal contained in a right ideal, via the membership
    test a -> <a> ⊆ I.  For modular right ideals the closed form
    {a : Aa ⊆ I} must agree, and that agreement is asserted."""
    imask = _mask(right_ideal)
    if not anneid.is_right_ideal_mask(imask):
        raise NotRightIdeal(f"{anneid.label_set(imask)} is not a right ideal")
    out = 0
    for a in range(anneid.n):
        if bitset.is_subset(anneid.principal_masks[a], imask):
            out |= 1 << a
    if right_modular_unities(anneid, imask):
        alt = 0
        for a in range(anneid.n):
            if all(bitset.contains(imask, anneid.mul[x][a]) for x in range(anneid.n)):
                alt |= 1 << a
        if alt != out:
            raise ConsistencyError("check-of closed form disagrees on a modular right ideal")
    return HomSubset(anneid, out, TWO_SIDED)


# ---------------------------------------------------------------------------
# modularity


def _congruent(anneid: FiniteAnneid, x: int, y: int, imask: int) -> bool:
    # x ~ y mod I: both in I, or addable with difference in I
    if bitset.contains(imask, x) and bitset.contains(imask, y):
        return True
    if not anneid.addable(x, y):
        return False
    return bitset.contains(imask, anneid.sub_el(x, y))


def modular_unities(anneid: FiniteAnneid, ideal) -> tuple[int, ...]:
    """All e acting as a two-sided unity modulo the given two-sided ideal."""
    imask = _mask(ideal)
    out = []
    for e in range(anneid.n):
        if all(
            _congruent(anneid, anneid.mul[e][a], a, imask)
            and _congruent(anneid, anneid.mul[a][e], a, imask)
            for a in range(anneid.n)
        ):
            out.append(e)
    return tuple(out)


def is_modular(anneid: FiniteAnneid, ideal) -> bool:
    return bool(modular_unities(anneid, ideal))


def right_modular_unities(anneid: FiniteAnneid, right_ideal) -> tuple[int, ...]:
    """All e with ea ~ a mod I for every a (I may be merely a right ideal)."""
    imask = _mask(right_ideal)
    out = []
    for e in range(anneid.n):
        if all(
            _congruent(anneid, anneid.mul[e][a], a, imask)
            for a in range(anneid.n)
        ):
            out.append(e)
    return tuple(out)


def modular_degree(anneid: FiniteAnneid, ideal) -> int:
    """Common degree of all unities modulo a proper modular ideal of a
    regular anneid; the degree is asserted idempotent."""
    if not is_regular(anneid):
        raise NotRegular(f"{anneid.name} is not regular")
    imask = _mask(ideal)
    if imask == anneid.full_mask():
        raise NotModular("the whole anneid has no degree")
    unities = modular_unities(anneid, ideal)
    if not unities:
        raise NotModular(f"{anneid.label_set(imask)} is not modular")
    degrees = {anneid.deg(e) for e in unities}
    if len(degrees) != 1:
        raise DegreesDiffer(f"unities of {anneid.label_set(imask)} span degrees {degrees}")
    (deg,) = degrees
    if not anneid.grades.is_idempotent(deg):
        raise DegreesDiffer(f"degree {deg} of a modular ideal is not idempotent")
    return deg


# ---------------------------------------------------------------------------
# moving between the anneid and an idempotent component ring


def contract_ideal(anneid: FiniteAnneid, right_ideal, eps: int) -> int:
    """I ∩ A(eps) as a right-ideal mask of the component ring."""
    if not anneid.grades.is_idempotent(eps):
        raise NotIdempotent(f"grade {eps} is not idempotent")
    ring = component_ring(anneid, eps)
    imask = _mask(right_ideal)
    out = 0
    for rid, aid in enumerate(ring.anneid_ids):
        if bitset.contains(imask, aid):
            out |= 1 << rid
    return out


def extend_ideal(anneid: FiniteAnneid, ring_right_ideal: int, eps: int) -> HomSubset:
    """K = {x : xA ∩ A(eps) ⊆ I} for I a right ideal of the component ring."""
    if not anneid.grades.is_idempotent(eps):
        raise NotIdempotent(f"grade {eps} is not idempotent")
    ring = component_ring(anneid, eps)
    allowed = 1  # anneid ids allowed as products into the component
    for rid in bitset.members(ring_right_ideal):
        allowed |= 1 << ring.anneid_ids[rid]
    block = anneid.block_mask(eps)
    out = 0
    for x in range(anneid.n):
        row = anneid.mul[x]
        if all(
            not bitset.contains(block, row[y]) or bitset.contains(allowed, row[y])
            for y in range(anneid.n)
        ):
            out |= 1 << x
    return HomSubset(anneid, out, RIGHT_IDEAL)
