"""Finite associative rings by dense tables, with ideal-lattice machinery.

Rings show up in two roles: component rings carried by idempotent grades,
and linearizations of whole anneids.  Subsets are int bitmasks; tables are
numpy arrays so closure computations stay cheap for rings of a few
thousand elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import bitset
from .errors import AxiomViolation, LatticeTooLarge, MalformedTables, SizeExceeded

DEFAULT_MAX_IDEALS = 100000
_VALIDATION_CAP = 1024


@dataclass(frozen=True)
class RingGrading:
    """Grading payload attached to a linearization.

    ``components[g-1]`` lists the nonzero ring ids of homogeneous elements of
    grade g; ``hom_to_ring``/``ring_to_hom`` translate between anneid element
    ids and ring ids of homogeneous elements.
    """

    anneid: object
    components: tuple[tuple[int, ...], ...]
    hom_to_ring: tuple[int, ...]
    ring_to_hom: dict[int, int]


@dataclass(frozen=True, eq=False)
class FiniteRing:
    name: str
    labels: tuple[str, ...]
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    grading: RingGrading | None = None
    anneid_ids: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.labels)

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def full_mask(self) -> int:
        return bitset.full_mask(self.order)

    def label_set(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bitset.members(mask) if i != 0]

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, order={self.order})"


def ring_violations(add, mul) -> list:
    from .core import Violation

    add = np.asarray(add)
    mul = np.asarray(mul)
    m = add.shape[0]
    if add.shape != (m, m) or mul.shape != (m, m):
        raise MalformedTables("ring tables must be square and equally sized")
    if add.min() < 0 or add.max() >= m or mul.min() < 0 or mul.max() >= m:
        raise MalformedTables("ring table entries out of range")
    if m > _VALIDATION_CAP:
        raise SizeExceeded(m, _VALIDATION_CAP)

    out = []
    ar = np.arange(m)
    if not np.array_equal(add[0], ar) or not np.array_equal(add[:, 0], ar):
        out.append(Violation("ring-add", (0,), "0 is not neutral"))
    if not np.array_equal(add, add.T):
        i, j = np.argwhere(add != add.T)[0]
        out.append(Violation("ring-add", (int(i), int(j)), "addition not commutative"))
    for a in range(m):
        if not np.array_equal(add[add[a]], add[a][add]):
            out.append(Violation("ring-add", (a,), "addition not associative"))
            break
        if 0 not in add[a]:
            out.append(Violation("ring-add", (a,), "no additive inverse"))
    for a in range(m):
        if not np.array_equal(mul[mul[a]], mul[a][mul]):
            # recompute the offending triple for the witness
            for b in range(m):
                for c in range(m):
                    if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                        out.append(Violation("ring-assoc", (a, b, c)))
                        break
                else:
                    continue
                break
            break
    for a in range(m):
        left = mul[a][add]            # a*(b+c) for all b, c
        right = add[mul[a][:, None], mul[a][None, :]]
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            out.append(Violation("ring-distrib", (a, int(b), int(c)), "a(b+c) != ab+ac"))
            break
        left = mul[:, a][add]         # (b+c)*a
        right = add[mul[:, a][:, None], mul[:, a][None, :]]
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            out.append(Violation("ring-distrib", (int(b), int(c), a), "(b+c)a != ba+ca"))
            break
    return out


def make_ring(name, labels, add, mul, *, grading=None, anneid_ids=None,
              validate=True, neg=None) -> FiniteRing:
    add = np.ascontiguousarray(np.asarray(add, dtype=np.int32))
    mul = np.ascontiguousarray(np.asarray(mul, dtype=np.int32))
    if validate:
        violations = ring_violations(add, mul)
        if violations:
            raise AxiomViolation(violations)
    if neg is None:
        neg = np.array([int(np.where(add[a] == 0)[0][0]) for a in range(add.shape[0])],
                       dtype=np.int32)
    else:
        neg = np.asarray(neg, dtype=np.int32)
    add.setflags(write=False)
    mul.setflags(write=False)
    neg.setflags(write=False)
    return FiniteRing(name=name, labels=tuple(labels), add=add, mul=mul, neg=neg,
                      grading=grading, anneid_ids=anneid_ids)


def ring_unity(ring: FiniteRing) -> int | None:
    ar = np.arange(ring.order)
    for u in range(ring.order):
        if np.array_equal(ring.mul[u], ar) and np.array_equal(ring.mul[:, u], ar):
            return u
    return None


# ---------------------------------------------------------------------------
# additive closure and ideals


def additive_closure(ring: FiniteRing, gens) -> int:
    """Subgroup of (R, +) generated by the given elements, as a mask."""
    m = ring.order
    in_sub = np.zeros(m, dtype=bool)
    in_sub[0] = True
    elems = np.array([0], dtype=np.int32)
    for g in gens:
        g = int(g)
        if in_sub[g]:
            continue
        cyc = [g]
        x = int(ring.add[g, g])
        while x != g:
            cyc.append(x)
            x = int(ring.add[x, g])
        new = np.unique(ring.add[elems[:, None], np.array(cyc, dtype=np.int32)[None, :]])
        elems = np.unique(np.concatenate([elems, new]))
        in_sub[new] = True
    return bitset.mask_of(int(e) for e in elems)


def _mask_members(mask: int) -> np.ndarray:
    return np.fromiter(bitset.members(mask), dtype=np.int32)


@lru_cache(maxsize=None)
def _principal_two_sided(ring: FiniteRing) -> tuple[int, ...]:
    m = ring.order
    out = []
    for x in range(m):
        xr = np.unique(ring.mul[x])
        rx = np.unique(ring.mul[:, x])
        rxr = np.unique(ring.mul[:, xr])
        gens = np.unique(np.concatenate([[x], xr, rx, rxr.ravel()]))
        out.append(additive_closure(ring, gens))
    return tuple(out)


@lru_cache(maxsize=None)
def _principal_right(ring: FiniteRing) -> tuple[int, ...]:
    out = []
    for x in range(ring.order):
        gens = np.unique(np.concatenate([[x], np.unique(ring.mul[x])]))
        out.append(additive_closure(ring, gens))
    return tuple(out)


def principal_ideal(ring: FiniteRing, x: int) -> int:
    return _principal_two_sided(ring)[x]


def principal_right_ideal(ring: FiniteRing, x: int) -> int:
    return _principal_right(ring)[x]


def _join(ring: FiniteRing, a: int, b: int) -> int:
    ea = _mask_members(a)
    eb = _mask_members(b)
    total = np.unique(ring.add[ea[:, None], eb[None, :]])
    return bitset.mask_of(int(e) for e in total)


def _join_closure(ring: FiniteRing, principals, max_count: int) -> tuple[int, ...]:
    seen = set(principals)
    seen.add(1)
    frontier = list(seen)
    while frontier:
        if len(seen) > max_count:
            raise LatticeTooLarge(len(seen), max_count)
        fresh = []
        for i in frontier:
            for p in principals:
                if bitset.is_subset(p, i):
                    continue
                j = _join(ring, i, p)
                if j not in seen:
                    seen.add(j)
                    fresh.append(j)
                    if len(seen) > max_count:
                        raise LatticeTooLarge(len(seen), max_count)
        frontier = fresh
    return tuple(sorted(seen, key=lambda m: (bitset.popcount(m), m)))


@lru_cache(maxsize=None)
def enumerate_ring_ideals(ring: FiniteRing, max_count: int = DEFAULT_MAX_IDEALS):
    return _join_closure(ring, _principal_two_sided(ring), max_count)


@lru_cache(maxsize=None)
def enumerate_ring_right_ideals(ring: FiniteRing, max_count: int = DEFAULT_MAX_IDEALS):
    return _join_closure(ring, _principal_right(ring), max_count)


def _maximal(lattice, full: int):
    proper = [m for m in lattice if m != full]
    out = [
        m for m in proper
        if not any(m != o and bitset.is_subset(m, o) for o in proper)
    ]
    return tuple(out)


def maximal_ring_ideals(ring: FiniteRing, max_count: int = DEFAULT_MAX_IDEALS):
    return _maximal(enumerate_ring_ideals(ring, max_count), ring.full_mask())


def maximal_ring_right_ideals(ring: FiniteRing, max_count: int = DEFAULT_MAX_IDEALS):
    return _maximal(enumerate_ring_right_ideals(ring, max_count), ring.full_mask())


def ring_check_of(ring: FiniteRing, right_ideal: int) -> int:
    """Largest two-sided ideal inside a right ideal."""
    principals = _principal_two_sided(ring)
    out = 0
    for x in range(ring.order):
        if bitset.is_subset(principals[x], right_ideal):
            out |= 1 << x
    return out


def ring_modular_unities(ring: FiniteRing, ideal: int) -> tuple[int, ...]:
    """All e with ea - a and ae - a inside the ideal for every a."""
    out = []
    for e in range(ring.order):
        ok = True
        for a in range(ring.order):
            if not bitset.contains(ideal, ring.sub(int(ring.mul[e, a]), a)):
                ok = False
                break
            if not bitset.contains(ideal, ring.sub(int(ring.mul[a, e]), a)):
                ok = False
                break
        if ok:
            out.append(e)
    return tuple(out)


def is_ring_ideal(ring: FiniteRing, mask: int) -> bool:
    elems = bitset.member_list(mask)
    if 0 not in elems:
        return False
    for a in elems:
        for b in elems:
            if not bitset.contains(mask, ring.sub(a, b)):
                return False
        for x in range(ring.order):
            if not bitset.contains(mask, int(ring.mul[a, x])):
                return False
            if not bitset.contains(mask, int(ring.mul[x, a])):
                return False
    return True
