"""Finite anneids and their grade groupoids.

An anneid is the homogeneous part of a graded ring: a finite set with a
total multiplication, a partial addition defined inside "addibility
blocks" (each block together with 0 forms an abelian group), and a degree
map sending each nonzero element to its block.  Everything here is dense:
elements are small integer ids with 0 fixed as the zero element, and all
operations are table lookups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from . import bitset
from .errors import (
    AxiomViolation,
    ConsistencyError,
    MalformedTables,
    NotIdempotent,
    NotRegular,
    NotTwoSidedIdeal,
    SizeExceeded,
)

DEFAULT_LINEARIZATION_LIMIT = 65536


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance, with the witnessing elements."""

    axiom: str
    witness: tuple
    detail: str = ""


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome plus a witness when the answer is negative."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class GradeGroupoid:
    """The grade set: block ids 1..k plus an absorbing zero grade 0.

    ``product[x][y]`` is 0 exactly when every element product between the
    two blocks vanishes; otherwise it is the unique block receiving the
    nonzero products.
    """

    k: int
    product: tuple[tuple[int, ...], ...]
    idempotents: frozenset[int]

    @property
    def grades(self) -> range:
        return range(self.k + 1)

    @property
    def nonzero_grades(self) -> range:
        return range(1, self.k + 1)

    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]

    def is_idempotent(self, g: int) -> bool:
        return g in self.idempotents


@dataclass(frozen=True)
class FiniteAnneid:
    """A validated anneid given by dense tables.

    ``add[a][b]`` is -1 when a and b are not addable.  ``block_of[a]`` is
    the grade (1-based block id) of a, with ``block_of[0] == 0``.
    """

    name: str
    labels: tuple[str, ...]
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    add: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    mul: tuple[tuple[int, ...], ...]
    grades: GradeGroupoid
    projection: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    def nonzero(self) -> range:
        return range(1, self.n)

    def deg(self, a: int) -> int:
        return self.block_of[a]

    def block_elems(self, g: int) -> tuple[int, ...]:
        return self.blocks[g - 1]

    def addable(self, a: int, b: int) -> bool:
        return a == 0 or b == 0 or self.block_of[a] == self.block_of[b]

    def add_el(self, a: int, b: int) -> int:
        s = self.add[a][b]
        if s < 0:
            raise ValueError(f"{self.labels[a]} and {self.labels[b]} are not addable")
        return s

    def sub_el(self, a: int, b: int) -> int:
        return self.add_el(a, self.neg[b])

    def mul_el(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def full_mask(self) -> int:
        return bitset.full_mask(self.n)

    def block_mask(self, g: int) -> int:
        return bitset.mask_of(self.blocks[g - 1])

    def label_set(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bitset.members(mask) if i != 0]

    def __repr__(self) -> str:
        return f"FiniteAnneid({self.name!r}, n={self.n}, blocks={len(self.blocks)})"

    # -- additive closure -------------------------------------------------

    def block_span(self, g: int, elems: list[int]) -> int:
        """Subgroup of block g (with 0) generated by the given members."""
        sub = {0}
        frontier = [e for e in elems if e]
        for e in frontier:
            if e in sub:
                continue
            cosets = list(sub)
            x = e
            while x not in sub:
                sub.update(self.add[x][c] for c in cosets)
                x = self.add[x][e]
        return bitset.mask_of(sub)

    def additive_span(self, elems) -> int:
        """Per-block subgroup closure of a set of elements, as a mask."""
        per_block: dict[int, list[int]] = {}
        for e in elems:
            if e:
                per_block.setdefault(self.block_of[e], []).append(e)
        mask = 1
        for g, part in per_block.items():
            mask |= self.block_span(g, part)
        return mask

    # -- principal ideals --------------------------------------------------

    @cached_property
    def principal_right_masks(self) -> tuple[int, ...]:
        out = []
        for a in range(self.n):
            gens = [a] + [self.mul[a][x] for x in range(self.n)]
            out.append(self.additive_span(gens))
        return tuple(out)

    @cached_property
    def principal_masks(self) -> tuple[int, ...]:
        out = []
        for a in range(self.n):
            gens = [a]
            gens += [self.mul[a][x] for x in range(self.n)]
            gens += [self.mul[x][a] for x in range(self.n)]
            gens += [
                self.mul[self.mul[x][a]][y]
                for x in range(self.n)
                for y in range(self.n)
            ]
            out.append(self.additive_span(gens))
        return tuple(out)

    # -- subset closure predicates ------------------------------------------

    def is_subanneid_mask(self, mask: int) -> bool:
        if not mask & 1:
            return False
        elems = bitset.member_list(mask)
        per_block: dict[int, list[int]] = {}
        for e in elems:
            if e:
                per_block.setdefault(self.block_of[e], []).append(e)
        for g, part in per_block.items():
            if self.block_span(g, part) | 1 != bitset.mask_of(part) | 1:
                return False
        return True

    def is_right_ideal_mask(self, mask: int) -> bool:
        if not self.is_subanneid_mask(mask):
            return False
        for a in bitset.members(mask):
            for x in range(self.n):
                if not bitset.contains(mask, self.mul[a][x]):
                    return False
        return True

    def is_left_closed_mask(self, mask: int) -> bool:
        for a in bitset.members(mask):
            for x in range(self.n):
                if not bitset.contains(mask, self.mul[x][a]):
                    return False
        return True

    def is_two_sided_mask(self, mask: int) -> bool:
        return self.is_right_ideal_mask(mask) and self.is_left_closed_mask(mask)


# ---------------------------------------------------------------------------
# validation


def anneid_violations(elements, blocks, add, mul) -> list[Violation]:
    """Check every axiom instance; raises MalformedTables if the tables are
    not even interpretable, otherwise returns all recorded violations."""
    n = len(elements)
    if n == 0:
        raise MalformedTables("empty element list")
    if len(set(elements)) != n:
        raise MalformedTables("duplicate element labels")

    seen: set[int] = set()
    for b, block in enumerate(blocks):
        if not block:
            raise MalformedTables(f"block {b} is empty")
        for e in block:
            if not isinstance(e, int) or not 1 <= e < n:
                raise MalformedTables(f"block {b} contains bad id {e!r}")
            if e in seen:
                raise MalformedTables(f"element id {e} appears in two blocks")
            seen.add(e)
    if seen != set(range(1, n)):
        missing = sorted(set(range(1, n)) - seen)
        raise MalformedTables(f"blocks do not cover nonzero ids (missing {missing})")

    if len(add) != len(blocks):
        raise MalformedTables("one addition table per block required")
    for b, (block, table) in enumerate(zip(blocks, add)):
        idx = [0] + list(block)
        s = len(idx)
        if len(table) != s or any(len(row) != s for row in table):
            raise MalformedTables(f"addition table {b} is not {s}x{s}")
        allowed = set(idx)
        for row in table:
            for v in row:
                if v not in allowed:
                    raise MalformedTables(f"addition table {b} leaves block∪{{0}}: {v!r}")

    if len(mul) != n or any(len(row) != n for row in mul):
        raise MalformedTables("multiplication table is not square over all elements")
    for row in mul:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise MalformedTables(f"multiplication entry out of range: {v!r}")

    block_of = [0] * n
    for b, block in enumerate(blocks):
        for e in block:
            block_of[e] = b + 1

    violations: list[Violation] = []

    # a1: 0 is multiplicatively absorbing.
    for a in range(n):
        if mul[0][a] != 0:
            violations.append(Violation("a1", (0, a), "0*a != 0"))
        if mul[a][0] != 0:
            violations.append(Violation("a1", (a, 0), "a*0 != 0"))

    # a3: each block with 0 is an abelian group under its table.
    pos_add: list[dict[tuple[int, int], int]] = []
    for b, (block, table) in enumerate(zip(blocks, add)):
        idx = [0] + list(block)
        lut = {}
        for i, x in enumerate(idx):
            for j, y in enumerate(idx):
                lut[x, y] = table[i][j]
        pos_add.append(lut)
        for x in idx:
            if lut[0, x] != x or lut[x, 0] != x:
                violations.append(Violation("a3", (b, x), "0 is not neutral"))
        for x in idx:
            for y in idx:
                if lut[x, y] != lut[y, x]:
                    violations.append(Violation("a3", (b, x, y), "addition not commutative"))
        for x in idx:
            for y in idx:
                for z in idx:
                    if lut[lut[x, y], z] != lut[x, lut[y, z]]:
                        violations.append(Violation("a3", (b, x, y, z), "addition not associative"))
        for x in idx:
            if all(lut[x, y] != 0 for y in idx):
                violations.append(Violation("a3", (b, x), "no additive inverse"))

    def padd(x, y):
        # partial addition; assumes x # y
        if x == 0:
            return y
        if y == 0:
            return x
        return pos_add[block_of[x] - 1][x, y]

    def addable(x, y):
        return x == 0 or y == 0 or block_of[x] == block_of[y]

    # a4: multiplication distributes over addable sums and preserves
    # addability on both sides.  Pairs with a zero member are forced by a1.
    for block in blocks:
        for a in block:
            for b_ in block:
                s = padd(a, b_)
                for c in range(n):
                    ca, cb = mul[c][a], mul[c][b_]
                    if not addable(ca, cb):
                        violations.append(Violation("a4", (c, a, b_), "c*a and c*b not addable"))
                    elif mul[c][s] != padd(ca, cb):
                        violations.append(Violation("a4", (c, a, b_), "c(a+b) != ca+cb"))
                    ac, bc = mul[a][c], mul[b_][c]
                    if not addable(ac, bc):
                        violations.append(Violation("a4", (a, b_, c), "a*c and b*c not addable"))
                    elif mul[s][c] != padd(ac, bc):
                        violations.append(Violation("a4", (a, b_, c), "(a+b)c != ac+bc"))

    # grading soundness: nonzero products of two blocks land in one block.
    k = len(blocks)
    for i in range(k):
        for j in range(k):
            target = 0
            first = None
            for a in blocks[i]:
                for b_ in blocks[j]:
                    p = mul[a][b_]
                    if p == 0:
                        continue
                    if target == 0:
                        target = block_of[p]
                        first = (a, b_)
                    elif block_of[p] != target:
                        violations.append(
                            Violation("grading", (first[0], first[1], a, b_),
                                      "block products land in two blocks"))

    # associativity of multiplication.
    for a in range(1, n):
        for b_ in range(1, n):
            ab = mul[a][b_]
            for c in range(1, n):
                if mul[ab][c] != mul[a][mul[b_][c]]:
                    violations.append(Violation("associativity", (a, b_, c)))

    return violations


def validate_anneid(elements, blocks, add, mul, *, name: str = "A") -> FiniteAnneid:
    """Build a FiniteAnneid from raw tables, or raise with every violation."""
    violations = anneid_violations(elements, blocks, add, mul)
    if violations:
        raise AxiomViolation(violations)

    n = len(elements)
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

    grades = _derive_grades(n, len(blocks), block_of, mul, blocks)

    return FiniteAnneid(
        name=name,
        labels=tuple(str(e) for e in elements),
        blocks=tuple(tuple(b) for b in blocks),
        block_of=tuple(block_of),
        add=tuple(tuple(row) for row in full_add),
        neg=tuple(neg),
        mul=tuple(tuple(row) for row in mul),
        grades=grades,
    )


def _derive_grades(n, k, block_of, mul, blocks) -> GradeGroupoid:
    product = [[0] * (k + 1) for _ in range(k + 1)]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            for a in blocks[i - 1]:
                for b in blocks[j - 1]:
                    p = mul[a][b]
                    if p:
                        product[i][j] = block_of[p]
                        break
                if product[i][j]:
                    break
    idem = frozenset(g for g in range(1, k + 1) if product[g][g] == g)
    return GradeGroupoid(k=k, product=tuple(tuple(r) for r in product), idempotents=idem)


def derive_grades(anneid: FiniteAnneid) -> GradeGroupoid:
    """The grade groupoid of a validated anneid (always derived, never given)."""
    return anneid.grades


# ---------------------------------------------------------------------------
# structure predicates


@lru_cache(maxsize=None)
def is_regular(anneid: FiniteAnneid) -> Verdict:
    """Cancellativity: addability of nonzero products forces addability of
    the varying factors; the witness is the failing (a, b, c)."""
    n = anneid.n
    mul = anneid.mul
    for c in range(n):
        for a in range(1, n):
            ac = mul[a][c]
            ca = mul[c][a]
            for b in range(a + 1, n):
                if anneid.addable(a, b):
                    continue
                bc = mul[b][c]
                if ac and bc and anneid.addable(ac, bc):
                    return Verdict(False, (a, b, c))
                cb = mul[c][b]
                if ca and cb and anneid.addable(ca, cb):
                    return Verdict(False, (a, b, c))
    return Verdict(True)


def delta_assumption_holds(grades: GradeGroupoid) -> Verdict:
    """No product of two nonidempotent grades is a nonzero idempotent."""
    for x in grades.nonzero_grades:
        if x in grades.idempotents:
            continue
        for y in grades.nonzero_grades:
            if y in grades.idempotents:
                continue
            p = grades.product[x][y]
            if p and p in grades.idempotents:
                return Verdict(False, (x, y))
    return Verdict(True)


def has_unity(anneid: FiniteAnneid) -> int | None:
    """The anneid's own two-sided unity element, if any."""
    for e in anneid.nonzero():
        if all(anneid.mul[e][a] == a and anneid.mul[a][e] == a for a in range(anneid.n)):
            return e
    return None


@dataclass(frozen=True)
class SimplicityReport:
    simple_with_unity: bool
    regular: bool
    in_class_m: bool


def is_simple_with_unity(anneid: FiniteAnneid) -> SimplicityReport:
    """Only trivial two-sided ideals plus a unity; class-M membership adds
    regularity.  The zero anneid is not simple."""
    full = anneid.full_mask()
    simple = anneid.n > 1 and all(
        anneid.principal_masks[a] == full for a in anneid.nonzero()
    )
    unital = has_unity(anneid) is not None
    regular = bool(is_regular(anneid))
    ok = simple and unital
    return SimplicityReport(ok, regular, ok and regular)


@lru_cache(maxsize=None)
def is_strongly_graded(anneid: FiniteAnneid) -> bool:
    """Every defined grade product's element products additively span the
    whole target block."""
    g = anneid.grades
    for i in g.nonzero_grades:
        for j in g.nonzero_grades:
            t = g.product[i][j]
            if not t:
                continue
            prods = [
                anneid.mul[a][b]
                for a in anneid.block_elems(i)
                for b in anneid.block_elems(j)
            ]
            if anneid.block_span(t, [p for p in prods if p]) != anneid.block_mask(t) | 1:
                return False
    return True


def unity_criterion(anneid: FiniteAnneid, *, size_limit: int = DEFAULT_LINEARIZATION_LIMIT) -> bool:
    """Whether the linearization has a unity, decided on the homogeneous part:
    every idempotent-grade component ring needs a unity, and every element
    must be framed by two of those component unities.  Cross-checked against
    a direct unity search in the linearization when that fits the limit."""
    if not is_regular(anneid):
        raise NotRegular(f"{anneid.name} is not regular")

    ones: dict[int, int] = {}
    result = True
    for eps in sorted(anneid.grades.idempotents):
        one = _component_unity(anneid, eps)
        if one is None:
            result = False
            break
        ones[eps] = one
    if result:
        for x in anneid.nonzero():
            left = any(anneid.mul[e][x] == x for e in ones.values())
            right = any(anneid.mul[x][e] == x for e in ones.values())
            if not (left and right):
                result = False
                break
    if result and not ones:
        result = anneid.n == 1  # only the zero anneid is unital without idempotents

    size = 1
    for block in anneid.blocks:
        size *= len(block) + 1
    if size <= size_limit:
        from . import rings

        direct = rings.ring_unity(linearize(anneid, size_limit=size_limit)) is not None
        if direct != result:
            raise ConsistencyError(
                f"unity criterion ({result}) disagrees with direct search ({direct})")
    return result


def _component_unity(anneid: FiniteAnneid, eps: int) -> int | None:
    elems = anneid.block_elems(eps)
    for e in elems:
        if all(anneid.mul[e][x] == x and anneid.mul[x][e] == x for x in elems):
            return e
    return None


# ---------------------------------------------------------------------------
# derived structures


@lru_cache(maxsize=None)
def component_ring(anneid: FiniteAnneid, eps: int):
    """The ring carried by an idempotent-grade block, with 0 adjoined."""
    from . import rings

    if not anneid.grades.is_idempotent(eps):
        raise NotIdempotent(f"grade {eps} of {anneid.name} is not idempotent")
    ids = [0] + list(anneid.block_elems(eps))
    back = {e: i for i, e in enumerate(ids)}
    m = len(ids)
    add = [[back[anneid.add[ids[i]][ids[j]]] for j in range(m)] for i in range(m)]
    mul = [[back[anneid.mul[ids[i]][ids[j]]] for j in range(m)] for i in range(m)]
    return rings.make_ring(
        name=f"{anneid.name}({eps})",
        labels=tuple(anneid.labels[e] for e in ids),
        add=add,
        mul=mul,
        anneid_ids=tuple(ids),
    )


@lru_cache(maxsize=None)
def linearize(anneid: FiniteAnneid, size_limit: int = DEFAULT_LINEARIZATION_LIMIT):
    """The graded ring rebuilt from the anneid: tuples of block components
    with componentwise addition and linearly extended multiplication."""
    import numpy as np

    from . import rings

    k = len(anneid.blocks)
    radii = [len(b) + 1 for b in anneid.blocks]
    size = 1
    for r in radii:
        size *= r
    if size > size_limit:
        raise SizeExceeded(size, size_limit)

    strides = [0] * k
    acc = 1
    for i in range(k):
        strides[i] = acc
        acc *= radii[i]

    # per-block lookup tables in code space (0 encodes the zero component)
    blk_elem = [np.array([0] + list(b), dtype=np.int32) for b in anneid.blocks]
    code_in_block = np.zeros(anneid.n, dtype=np.int32)
    for b in anneid.blocks:
        for c, e in enumerate(b, start=1):
            code_in_block[e] = c
    blk_add = []
    blk_neg = []
    for i, b in enumerate(anneid.blocks):
        ids = [0] + list(b)
        t = np.array(
            [[code_in_block[anneid.add[x][y]] for y in ids] for x in ids],
            dtype=np.int32,
        )
        blk_add.append(t)
        blk_neg.append(np.array([code_in_block[anneid.neg[x]] for x in ids], dtype=np.int32))

    codes = np.zeros((size, k), dtype=np.int32)
    idx = np.arange(size)
    for i in range(k):
        codes[:, i] = (idx // strides[i]) % radii[i]

    add_table = np.zeros((size, size), dtype=np.int32)
    for i in range(k):
        add_table += strides[i] * blk_add[i][codes[:, i][:, None], codes[:, i][None, :]]

    neg_vec = np.zeros(size, dtype=np.int32)
    for i in range(k):
        neg_vec += strides[i] * blk_neg[i][codes[:, i]]

    anneid_mul = np.array(anneid.mul, dtype=np.int32)
    gp = anneid.grades.product
    mul_table = np.zeros((size, size), dtype=np.int32)
    chunk = max(1, (1 << 22) // max(size, 1))
    for lo in range(0, size, chunk):
        hi = min(size, lo + chunk)
        res_codes = {g: np.zeros((hi - lo, size), dtype=np.int32) for g in range(1, k + 1)}
        for i in range(k):
            xi = blk_elem[i][codes[lo:hi, i]]
            for j in range(k):
                g = gp[i + 1][j + 1]
                if not g:
                    continue
                yj = blk_elem[j][codes[:, j]]
                prod = anneid_mul[xi[:, None], yj[None, :]]
                res_codes[g] = blk_add[g - 1][res_codes[g], code_in_block[prod]]
        part = np.zeros((hi - lo, size), dtype=np.int32)
        for g in range(1, k + 1):
            part += strides[g - 1] * res_codes[g]
        mul_table[lo:hi] = part

    hom_to_ring = [0] * anneid.n
    for i, b in enumerate(anneid.blocks):
        for c, e in enumerate(b, start=1):
            hom_to_ring[e] = strides[i] * c
    components = tuple(
        tuple(strides[i] * c for c in range(1, radii[i])) for i in range(k)
    )

    labels = []
    for x in range(size):
        parts = [
            anneid.labels[blk_elem[i][codes[x, i]]] for i in range(k) if codes[x, i]
        ]
        labels.append("+".join(parts) if parts else anneid.labels[0])

    grading = rings.RingGrading(
        anneid=anneid,
        components=components,
        hom_to_ring=tuple(hom_to_ring),
        ring_to_hom={r: a for a, r in enumerate(hom_to_ring)},
    )
    ring = rings.make_ring(
        name=f"lin({anneid.name})",
        labels=tuple(labels),
        add=add_table,
        mul=mul_table,
        grading=grading,
        validate=False,
        neg=neg_vec,
    )
    _assert_graded_ring(anneid, ring)
    return ring


def _assert_graded_ring(anneid: FiniteAnneid, ring) -> None:
    # nonzero component products must land in the component of the grade
    # product, and a nonzero product forces the grade product to be defined
    g = anneid.grades
    comp_of = {0: 0}
    for i, comp in enumerate(ring.grading.components, start=1):
        for r in comp:
            comp_of[r] = i
    for i in g.nonzero_grades:
        for j in g.nonzero_grades:
            t = g.product[i][j]
            for x in ring.grading.components[i - 1]:
                for y in ring.grading.components[j - 1]:
                    p = int(ring.mul[x, y])
                    if p == 0:
                        continue
                    if t == 0 or comp_of.get(p) != t:
                        raise ConsistencyError(
                            f"linearization of {anneid.name} breaks the grading at "
                            f"({x},{y})")


def factor_anneid(anneid: FiniteAnneid, ideal) -> FiniteAnneid:
    """Quotient by a two-sided ideal; classes collapse a block when the whole
    block sits inside the ideal.  The canonical projection is recorded on the
    result, and regularity is checked to survive the quotient."""
    mask = getattr(ideal, "mask", ideal)
    if not anneid.is_two_sided_mask(mask):
        raise NotTwoSidedIdeal(f"{anneid.label_set(mask)} is not a two-sided ideal")

    n = anneid.n
    cls = [-1] * n
    reps = [0]
    for a in range(n):
        if bitset.contains(mask, a):
            cls[a] = 0
    for a in range(1, n):
        if cls[a] >= 0:
            continue
        cls[a] = len(reps)
        reps.append(a)
        for b in anneid.block_elems(anneid.block_of[a]):
            if cls[b] < 0 and bitset.contains(mask, anneid.sub_el(a, b)):
                cls[b] = cls[a]

    m = len(reps)
    labels = [f"[{anneid.labels[r]}]" for r in reps]
    block_groups: dict[int, list[int]] = {}
    for c in range(1, m):
        block_groups.setdefault(anneid.block_of[reps[c]], []).append(c)
    new_blocks = [block_groups[g] for g in sorted(block_groups)]

    add_tables = []
    for block in new_blocks:
        idx = [0] + block
        table = []
        for x in idx:
            row = []
            for y in idx:
                if x == 0:
                    row.append(y)
                elif y == 0:
                    row.append(x)
                else:
                    row.append(cls[anneid.add_el(reps[x], reps[y])])
            table.append(row)
        add_tables.append(table)

    mul = [[cls[anneid.mul[reps[x]][reps[y]]] for y in range(m)] for x in range(m)]

    quotient = validate_anneid(labels, new_blocks, add_tables, mul,
                               name=f"{anneid.name}/I")
    quotient = FiniteAnneid(
        name=quotient.name,
        labels=quotient.labels,
        blocks=quotient.blocks,
        block_of=quotient.block_of,
        add=quotient.add,
        neg=quotient.neg,
        mul=quotient.mul,
        grades=quotient.grades,
        projection=tuple(cls),
    )
    if is_regular(anneid) and not is_regular(quotient):
        raise ConsistencyError(
            f"quotient of regular {anneid.name} came out non-regular")
    return quotient
