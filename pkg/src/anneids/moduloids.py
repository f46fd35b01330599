"""Finite right moduloids: homogeneous parts of graded modules.

A moduloid shares the block/partial-addition shape of an anneid and carries
a total right action by the owner anneid.  The simplicity notion used here
is the strong one: irreducible, and every ideal that does not annihilate the
moduloid contains (inside its linearized span) an element acting as the
identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import bitset
from .core import FiniteAnneid, Verdict, Violation
from .errors import AxiomViolation, MalformedTables, NotRightIdeal, SizeExceeded
from .ideals import TWO_SIDED, HomSubset, enumerate_ideals, _mask


@dataclass(frozen=True)
class FiniteModuloid:
    """A validated right moduloid over ``anneid``, by dense tables."""

    anneid: FiniteAnneid
    labels: tuple[str, ...]
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    add: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    action: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def nonzero(self) -> range:
        return range(1, self.n)

    def addable(self, x: int, y: int) -> bool:
        return x == 0 or y == 0 or self.block_of[x] == self.block_of[y]

    def add_el(self, x: int, y: int) -> int:
        s = self.add[x][y]
        if s < 0:
            raise ValueError("not addable")
        return s

    def act(self, x: int, a: int) -> int:
        return self.action[x][a]

    def block_span(self, g: int, elems) -> int:
        sub = {0}
        for e in elems:
            if not e or e in sub:
                continue
            cosets = list(sub)
            x = e
            while x not in sub:
                sub.update(self.add[x][c] for c in cosets)
                x = self.add[x][e]
        return bitset.mask_of(sub)

    def additive_span(self, elems) -> int:
        per_block: dict[int, list[int]] = {}
        for e in elems:
            if e:
                per_block.setdefault(self.block_of[e], []).append(e)
        mask = 1
        for g, part in per_block.items():
            mask |= self.block_span(g, part)
        return mask

    def __repr__(self) -> str:
        return f"FiniteModuloid(over {self.anneid.name}, n={self.n})"


def moduloid_violations(anneid, labels, blocks, add, action) -> list[Violation]:
    n = len(labels)
    if n == 0:
        raise MalformedTables("empty moduloid")
    seen = set()
    for b, block in enumerate(blocks):
        if not block:
            raise MalformedTables(f"moduloid block {b} empty")
        for e in block:
            if not 1 <= e < n or e in seen:
                raise MalformedTables(f"bad moduloid block member {e}")
            seen.add(e)
    if seen != set(range(1, n)):
        raise MalformedTables("moduloid blocks must partition the nonzero elements")
    if len(add) != len(blocks):
        raise MalformedTables("one addition table per moduloid block required")
    if len(action) != n or any(len(row) != anneid.n for row in action):
        raise MalformedTables("action table must be |M| x |A|")

    block_of = [0] * n
    for b, block in enumerate(blocks):
        for e in block:
            block_of[e] = b + 1

    out: list[Violation] = []
    luts = []
    for b, (block, table) in enumerate(zip(blocks, add)):
        idx = [0] + list(block)
        s = len(idx)
        if len(table) != s or any(len(r) != s for r in table):
            raise MalformedTables(f"moduloid addition table {b} is not {s}x{s}")
        lut = {}
        for i, x in enumerate(idx):
            for j, y in enumerate(idx):
                v = table[i][j]
                if v not in set(idx):
                    raise MalformedTables(f"moduloid addition {b} leaves the block")
                lut[x, y] = v
        luts.append(lut)
        for x in idx:
            if lut[0, x] != x or lut[x, 0] != x:
                out.append(Violation("m-group", (b, x), "0 not neutral"))
        for x in idx:
            for y in idx:
                if lut[x, y] != lut[y, x]:
                    out.append(Violation("m-group", (b, x, y), "not commutative"))
                for z in idx:
                    if lut[lut[x, y], z] != lut[x, lut[y, z]]:
                        out.append(Violation("m-group", (b, x, y, z), "not associative"))
        for x in idx:
            if all(lut[x, y] != 0 for y in idx):
                out.append(Violation("m-group", (b, x), "no inverse"))

    def padd(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        return luts[block_of[x] - 1][x, y]

    def maddable(x, y):
        return x == 0 or y == 0 or block_of[x] == block_of[y]

    # action of 0 and on 0
    for x in range(n):
        if action[x][0] != 0:
            out.append(Violation("m-zero", (x, 0), "x*0 != 0"))
    for a in range(anneid.n):
        if action[0][a] != 0:
            out.append(Violation("m-zero", (0, a), "0*a != 0"))

    # distributivity over addable sums on both sides
    for block in blocks:
        for x in block:
            for y in block:
                s = padd(x, y)
                for a in range(anneid.n):
                    xa, ya = action[x][a], action[y][a]
                    if not maddable(xa, ya):
                        out.append(Violation("m-distrib", (x, y, a), "xa, ya not addable"))
                    elif action[s][a] != padd(xa, ya):
                        out.append(Violation("m-distrib", (x, y, a), "(x+y)a != xa+ya"))
    for ab in anneid.blocks:
        for a in ab:
            for b in ab:
                s = anneid.add_el(a, b)
                for x in range(n):
                    xa, xb = action[x][a], action[x][b]
                    if not maddable(xa, xb):
                        out.append(Violation("m-distrib", (x, a, b), "xa, xb not addable"))
                    elif action[x][s] != padd(xa, xb):
                        out.append(Violation("m-distrib", (x, a, b), "x(a+b) != xa+xb"))

    # compatibility with multiplication
    for x in range(n):
        for a in range(anneid.n):
            xa = action[x][a]
            for b in range(anneid.n):
                if action[xa][b] != action[x][anneid.mul[a][b]]:
                    out.append(Violation("m-assoc", (x, a, b)))

    # graded action: one target block per (moduloid block, anneid grade)
    for mb in blocks:
        for g in anneid.grades.nonzero_grades:
            target = 0
            first = None
            for x in mb:
                for a in anneid.block_elems(g):
                    p = action[x][a]
                    if not p:
                        continue
                    if target == 0:
                        target = block_of[p]
                        first = (x, a)
                    elif block_of[p] != target:
                        out.append(Violation("m-grading", (first[0], first[1], x, a)))
    return out


def validate_moduloid(anneid, labels, blocks, add, action, *, name=None) -> FiniteModuloid:
    violations = moduloid_violations(anneid, labels, blocks, add, action)
    if violations:
        raise AxiomViolation(violations)
    n = len(labels)
    block_of = [0] * n
    for b, block in enumerate(blocks):
        for e in block:
            block_of[e] = b + 1
    full_add = [[-1] * n for _ in range(n)]
    for x in range(n):
        full_add[0][x] = x
        full_add[x][0] = x
    for block, table in zip(blocks, add):
        idx = [0] + list(block)
        for i, x in enumerate(idx):
            for j, y in enumerate(idx):
                full_add[x][y] = table[i][j]
    neg = [0] * n
    for x in range(1, n):
        for y in [0] + list(blocks[block_of[x] - 1]):
            if full_add[x][y] == 0:
                neg[x] = y
                break
    return FiniteModuloid(
        anneid=anneid,
        labels=tuple(labels),
        blocks=tuple(tuple(b) for b in blocks),
        block_of=tuple(block_of),
        add=tuple(tuple(r) for r in full_add),
        neg=tuple(neg),
        action=tuple(tuple(r) for r in action),
    )


# ---------------------------------------------------------------------------
# construction


@lru_cache(maxsize=None)
def quotient_moduloid(anneid: FiniteAnneid, right_ideal_mask: int) -> FiniteModuloid:
    """A/I with the action (a+I)c = ac+I, blocks induced by representatives."""
    if not anneid.is_right_ideal_mask(right_ideal_mask):
        raise NotRightIdeal(
            f"{anneid.label_set(right_ideal_mask)} is not a right ideal of {anneid.name}")
    n = anneid.n
    cls = [-1] * n
    reps = [0]
    for a in range(n):
        if bitset.contains(right_ideal_mask, a):
            cls[a] = 0
    for a in range(1, n):
        if cls[a] >= 0:
            continue
        cls[a] = len(reps)
        reps.append(a)
        for b in anneid.block_elems(anneid.block_of[a]):
            if cls[b] < 0 and bitset.contains(right_ideal_mask, anneid.sub_el(a, b)):
                cls[b] = cls[a]

    m = len(reps)
    labels = [f"[{anneid.labels[r]}]" for r in reps]
    groups: dict[int, list[int]] = {}
    for c in range(1, m):
        groups.setdefault(anneid.block_of[reps[c]], []).append(c)
    blocks = [groups[g] for g in sorted(groups)]
    add_tables = []
    for block in blocks:
        idx = [0] + block
        add_tables.append(
            [[cls[anneid.add_el(reps[x], reps[y])] if x and y else (y if x == 0 else x)
              for y in idx] for x in idx])
    action = [[cls[anneid.mul[reps[x]][a]] for a in range(n)] for x in range(m)]
    return validate_moduloid(anneid, labels, blocks, add_tables, action)


def regular_action_moduloid(anneid: FiniteAnneid) -> FiniteModuloid:
    """The anneid acting on itself on the right."""
    add_tables = []
    for block in anneid.blocks:
        idx = [0] + list(block)
        add_tables.append([[anneid.add[x][y] for y in idx] for x in idx])
    return validate_moduloid(
        anneid, anneid.labels, [list(b) for b in anneid.blocks], add_tables,
        [list(row) for row in anneid.mul])


# ---------------------------------------------------------------------------
# structure of a moduloid


def cyclic_submoduloid(mod: FiniteModuloid, x: int) -> int:
    """Smallest submoduloid containing x, as a mask."""
    mask = mod.additive_span([x])
    while True:
        extra = [mod.action[y][a] for y in bitset.members(mask) for a in range(mod.anneid.n)]
        new = mod.additive_span(list(bitset.members(mask)) + extra)
        if new == mask:
            return mask
        mask = new


def submoduloids(mod: FiniteModuloid) -> tuple[int, ...]:
    """The full submoduloid lattice (join closure of the cyclic ones)."""
    cyclics = [cyclic_submoduloid(mod, x) for x in range(mod.n)]
    seen = {1}
    seen.update(cyclics)
    frontier = list(seen)
    while frontier:
        fresh = []
        for i in frontier:
            for p in cyclics:
                if bitset.is_subset(p, i):
                    continue
                j = mod.additive_span(bitset.members(i | p))
                # the sum of submoduloids is action-closed already
                if j not in seen:
                    seen.add(j)
                    fresh.append(j)
        frontier = fresh
    return tuple(sorted(seen, key=lambda m: (bitset.popcount(m), m)))


def _acts_trivially(mod: FiniteModuloid) -> bool:
    return all(
        mod.action[x][a] == 0 for x in mod.nonzero() for a in range(mod.anneid.n)
    )


def is_irreducible(mod: FiniteModuloid) -> bool:
    """MA != 0 and no submoduloids besides 0 and M."""
    if mod.n == 1 or _acts_trivially(mod):
        return False
    full = bitset.full_mask(mod.n)
    return all(cyclic_submoduloid(mod, x) == full for x in mod.nonzero())


def is_regular_moduloid(mod: FiniteModuloid) -> Verdict:
    """xa # xb with both nonzero must force a # b."""
    for x in mod.nonzero():
        row = mod.action[x]
        for a in range(1, mod.anneid.n):
            xa = row[a]
            if not xa:
                continue
            for b in range(a + 1, mod.anneid.n):
                if mod.anneid.addable(a, b):
                    continue
                xb = row[b]
                if xb and mod.addable(xa, xb):
                    return Verdict(False, (x, a, b))
    return Verdict(True)


def annihilator(mod: FiniteModuloid) -> HomSubset:
    """{a : Ma = 0}, always a two-sided ideal of the owner."""
    mask = 0
    for a in range(mod.anneid.n):
        if all(mod.action[x][a] == 0 for x in range(mod.n)):
            mask |= 1 << a
    return HomSubset(mod.anneid, mask, TWO_SIDED)


def is_simple_moduloid(mod: FiniteModuloid, *, max_span: int = 65536,
                       max_ideals: int = 100000) -> bool:
    """Irreducible, and every non-annihilating ideal's linearized span holds
    an element fixing all of M.  Only minimal members of the (upward closed)
    non-annihilating family need a witness."""
    if not is_irreducible(mod):
        return False
    anneid = mod.anneid
    family = []
    for ideal in enumerate_ideals(anneid, max_ideals):
        if any(
            mod.action[x][s]
            for x in mod.nonzero()
            for s in ideal.members()
        ):
            family.append(ideal.mask)
    minimal = [
        m for m in family
        if not any(o != m and bitset.is_subset(o, m) for o in family)
    ]
    return all(_has_fixing_element(mod, m, max_span) for m in minimal)


def _has_fixing_element(mod: FiniteModuloid, ideal_mask: int, max_span: int) -> bool:
    anneid = mod.anneid
    per_block = []
    for g in anneid.grades.nonzero_grades:
        part = [e for e in anneid.block_elems(g) if bitset.contains(ideal_mask, e)]
        per_block.append(part)
    size = 1
    for part in per_block:
        size *= len(part) + 1
    if size > max_span:
        raise SizeExceeded(size, max_span)

    # homogeneous candidates first: cheap, and sufficient for regular moduloids
    for s in bitset.members(ideal_mask):
        if s and _fixes_all(mod, (s,)):
            return True
    for combo in itertools.product(*[[0] + part for part in per_block]):
        support = tuple(s for s in combo if s)
        if len(support) < 2:
            continue
        if _fixes_all(mod, support):
            return True
    return False


def _fixes_all(mod: FiniteModuloid, summands: tuple[int, ...]) -> bool:
    # x * (s1 + ... + sk) evaluated in the linearized module: accumulate the
    # homogeneous pieces per moduloid block and demand the bare result x.
    for x in mod.nonzero():
        acc: dict[int, int] = {}
        for s in summands:
            p = mod.action[x][s]
            if not p:
                continue
            g = mod.block_of[p]
            cur = acc.get(g, 0)
            acc[g] = mod.add[cur][p] if cur else p
        acc = {g: v for g, v in acc.items() if v}
        if acc != {mod.block_of[x]: x}:
            return False
    return True
