"""Domain types and exact difference calculus shared by every other module.

Everything here is pure integer arithmetic: multisets of differences are
canonicalised as sorted lists and compared by exact equality.  All types are
immutable after construction and safe to share across concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """A strictly increasing set of integer positions, at least two of them."""

    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elems", tuple(int(e) for e in self.elems))
        if len(self.elems) < 2:
            raise ValueError(f"block needs at least 2 elements, got {self.elems!r}")
        if any(a >= b for a, b in zip(self.elems, self.elems[1:])):
            raise ValueError(f"block elements must be strictly increasing: {self.elems!r}")

    @property
    def size(self) -> int:
        return len(self.elems)

    def normalized(self) -> "Block":
        """Translate so the minimum element is 0."""
        lo = self.elems[0]
        return self if lo == 0 else Block(tuple(e - lo for e in self.elems))


@dataclass(frozen=True)
class ParametricBlock:
    """A block whose elements are ``offset`` or ``x + offset`` for a formal shift x.

    Elements are (xcoef, offset) pairs with xcoef in {0, 1}, kept sorted by
    (xcoef, offset) with strictly increasing offsets inside each xcoef class.
    """

    elems: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        elems = tuple((int(c), int(o)) for c, o in self.elems)
        object.__setattr__(self, "elems", elems)
        if len(elems) < 2:
            raise ValueError(f"parametric block needs at least 2 elements: {elems!r}")
        if any(c not in (0, 1) for c, _ in elems):
            raise ValueError(f"xcoef must be 0 or 1: {elems!r}")
        if list(elems) != sorted(elems):
            raise ValueError(f"elements must be sorted by (xcoef, offset): {elems!r}")
        for cls in (0, 1):
            offs = self.offsets(cls)
            if any(a >= b for a, b in zip(offs, offs[1:])):
                raise ValueError(f"offsets must be strictly increasing per class: {elems!r}")

    def offsets(self, xcoef: int) -> tuple[int, ...]:
        return tuple(o for c, o in self.elems if c == xcoef)

    @property
    def is_concrete(self) -> bool:
        return all(c == 0 for c, _ in self.elems)

    @property
    def size(self) -> int:
        return len(self.elems)

    def normalized(self) -> "ParametricBlock":
        """Translate so the minimum concrete offset (or, failing that, the
        minimum shifted offset) is 0."""
        conc = self.offsets(0)
        lo = conc[0] if conc else self.offsets(1)[0]
        if lo == 0:
            return self
        return ParametricBlock(tuple((c, o - lo) for c, o in self.elems))


def parametric_from_block(b: Block) -> ParametricBlock:
    return ParametricBlock(tuple((0, e) for e in b.elems))


@dataclass(frozen=True)
class SymmetricRange:
    """The symmetric integer interval {-r, ..., r} with m = 2r + 1 elements."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.m % 2 == 0:
            raise ValueError(f"m must be an odd positive integer, got {self.m}")

    @property
    def r(self) -> int:
        return (self.m - 1) // 2

    def values(self) -> range:
        return range(-self.r, self.r + 1)

    def __contains__(self, v: int) -> bool:
        return -self.r <= v <= self.r


def symmetric_values(m: int) -> range:
    return SymmetricRange(m).values()


def hole_values(l: int, h: int) -> tuple[int, ...]:
    """The regular hole l*I_h = {l*i : i in I_h}."""
    if l < 1 or h < 1 or h % 2 == 0:
        raise ValueError(f"hole needs l >= 1 and odd h >= 1, got (l={l}, h={h})")
    rh = (h - 1) // 2
    return tuple(l * i for i in range(-rh, rh + 1))


@dataclass(frozen=True)
class DiffMatrix:
    """An n x cols integer matrix over the basis I_m, optionally with a regular
    hole (l, h) removed from every row and every pairwise row-difference list.

    Hole empty means a full matrix (cols = m); hole (l, h) means the values
    l*I_h are missing (cols = m - h).  Shape sanity is enforced here; the
    permutation/difference properties are the verify module's business, so
    corrupted candidates stay representable.
    """

    rows: tuple[tuple[int, ...], ...]
    m: int
    hole: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.m < 1 or self.m % 2 == 0:
            raise ValueError(f"basis order m must be odd and positive, got {self.m}")
        if not rows:
            raise ValueError("matrix needs at least one row")
        if len({len(row) for row in rows}) != 1:
            raise ValueError("all rows must have equal length")
        if self.hole is not None:
            l, h = self.hole
            object.__setattr__(self, "hole", (int(l), int(h)))
            r_hole = l * (h - 1) // 2
            if l < 1 or h < 1 or h % 2 == 0 or r_hole > (self.m - 1) // 2:
                raise ValueError(f"hole {self.hole!r} does not fit inside I_{self.m}")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def cols(self) -> int:
        return len(self.rows[0])

    @property
    def r(self) -> int:
        return (self.m - 1) // 2

    def base_values(self) -> tuple[int, ...]:
        """I_m minus the hole, ascending: what every row must cover."""
        if self.hole is None:
            return tuple(symmetric_values(self.m))
        missing = set(hole_values(*self.hole))
        return tuple(v for v in symmetric_values(self.m) if v not in missing)


@dataclass(frozen=True)
class AspSequence:
    """n orderings of I_m whose consecutive-run vector sums are permutations."""

    perms: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self) -> None:
        perms = tuple(tuple(int(v) for v in p) for p in self.perms)
        object.__setattr__(self, "perms", perms)
        if self.m < 1 or self.m % 2 == 0:
            raise ValueError(f"order m must be odd and positive, got {self.m}")
        if not perms:
            raise ValueError("sequence needs at least one permutation")
        if any(len(p) != self.m for p in perms):
            raise ValueError("every permutation must have exactly m entries")

    @property
    def n(self) -> int:
        return len(self.perms)


AnyBlock = Union[Block, ParametricBlock]

FAMILY_KINDS = ("pdf", "pdp", "variable_pdf", "psds")


@dataclass(frozen=True)
class DiffFamily:
    """A set of blocks plus the kind of difference structure it claims to be.

    ``g`` is the target order for pdf/pdp kinds, ``leave`` the difference
    leave of a pdp, ``t`` the block count of a variable pdf, and ``c`` the
    threshold of a psds.  The block-size set K and the weight-4 ratio theta
    are derived, never stored.
    """

    blocks: tuple[AnyBlock, ...]
    kind: str
    g: int | None = None
    leave: frozenset[int] = frozenset()
    t: int | None = None
    c: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "leave", frozenset(self.leave))
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def sizes(self) -> frozenset[int]:
        return frozenset(b.size for b in self.blocks)

    @property
    def theta(self) -> "object":
        """Ratio of size-4 blocks among all blocks (a Fraction), or None."""
        from fractions import Fraction

        if not self.blocks:
            return None
        four = sum(1 for b in self.blocks if b.size == 4)
        return Fraction(four, len(self.blocks))

    def is_concrete(self) -> bool:
        return all(isinstance(b, Block) or b.is_concrete for b in self.blocks)


@dataclass(frozen=True)
class LangfordPairing:
    """A pairing (e_i, f_i) of [1, 2s] whose differences hit [c, c+s-1]."""

    s: int
    c: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple((int(e), int(f)) for e, f in self.pairs))
        if self.s < 1 or self.c < 1:
            raise ValueError(f"s and c must be positive, got (s={self.s}, c={self.c})")


@dataclass(frozen=True)
class PlanNode:
    """One node of a construction tree: what to build, by which rule, from what."""

    kind: str
    params: Mapping[str, int]
    rule: str
    ingredients: tuple["PlanNode", ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", dict(self.params))
        object.__setattr__(self, "ingredients", tuple(self.ingredients))

    @property
    def is_leaf(self) -> bool:
        return not self.ingredients

    def walk(self) -> Iterable["PlanNode"]:
        yield self
        for ing in self.ingredients:
            yield from ing.walk()


# ---------------------------------------------------------------------------
# Difference calculus
# ---------------------------------------------------------------------------


def delta_list(b: Block) -> list[int]:
    """Directed differences {c_i - c_j : j < i}, sorted; size C(|b|, 2)."""
    e = b.elems
    out = [e[i] - e[j] for i in range(1, len(e)) for j in range(i)]
    out.sort()
    return out


def delta_blocks(blocks: Iterable[Block]) -> list[int]:
    """Multiset union of delta_list over concrete blocks, sorted."""
    out: list[int] = []
    for b in blocks:
        if isinstance(b, ParametricBlock):
            if not b.is_concrete:
                raise TypeError(f"block still carries the formal shift x: {b!r}")
            b = Block(b.offsets(0))
        out.extend(delta_list(b))
    out.sort()
    return out


def delta_family(f: DiffFamily) -> list[int]:
    """Directed differences of a whole family; rejects parametric blocks."""
    return delta_blocks(f.blocks)


@dataclass(frozen=True)
class ParametricDelta:
    """Differences of a parametric family split by their dependence on x.

    ``const_diffs`` are within-class differences, ``x_offsets`` the o with
    x + o a cross-class difference, and ``xmin`` the least shift making every
    instantiated block strictly increasing with the two covered ranges
    disjoint (max const below the lowest x + offset).
    """

    const_diffs: tuple[int, ...]
    x_offsets: tuple[int, ...]
    xmin: int


def delta_parametric(blocks: Sequence[ParametricBlock]) -> ParametricDelta:
    const: list[int] = []
    xoff: list[int] = []
    bounds: list[int] = []
    for b in blocks:
        lo = b.offsets(0)
        hi = b.offsets(1)
        const.extend(y - x for i, y in enumerate(lo) for x in lo[:i])
        const.extend(y - x for i, y in enumerate(hi) for x in hi[:i])
        xoff.extend(h - l for h in hi for l in lo)
        if lo and hi:
            # instantiated block increasing: x + min(hi) > max(lo)
            bounds.append(lo[-1] - hi[0] + 1)
    if const and xoff:
        bounds.append(max(const) - min(xoff) + 1)
    const.sort()
    xoff.sort()
    return ParametricDelta(tuple(const), tuple(xoff), max(bounds) if bounds else 0)


def instantiate(blocks: Sequence[ParametricBlock], x: int) -> list[Block]:
    """Substitute the formal shift; errors when x is below the family's xmin."""
    if any(not b.is_concrete for b in blocks):
        xmin = delta_parametric(blocks).xmin
        if x < xmin:
            raise ValueError(f"x={x} is below the admissibility threshold xmin={xmin}")
    out = []
    for b in blocks:
        vals = sorted(o + (x if c else 0) for c, o in b.elems)
        out.append(Block(tuple(vals)))
    return out


def scale_translate(b: Block, mul: int, add: int = 0) -> Block:
    """Elementwise mul*e + add, re-sorted; mul must be nonzero."""
    if mul == 0:
        raise ValueError("mul must be nonzero")
    return Block(tuple(sorted(mul * e + add for e in b.elems)))


# ---------------------------------------------------------------------------
# ASP <-> PDM conversion
# ---------------------------------------------------------------------------


def _is_perm_of(values: Sequence[int], base: Sequence[int]) -> bool:
    return sorted(values) == list(base)


def _check_asp(a: AspSequence) -> None:
    base = list(symmetric_values(a.m))
    n = a.n
    for lo in range(n):
        acc = [0] * a.m
        for hi in range(lo, n):
            p = a.perms[hi]
            acc = [s + v for s, v in zip(acc, p)]
            if not _is_perm_of(acc, base):
                raise ValueError(
                    f"consecutive run {lo}..{hi} does not sum to a permutation of I_{a.m}"
                )


def _check_pdm_full(d: DiffMatrix) -> None:
    if d.hole is not None:
        raise ValueError("conversion is defined for hole-free matrices only")
    base = list(symmetric_values(d.m))
    if d.cols != d.m:
        raise ValueError(f"expected {d.m} columns, found {d.cols}")
    for i, row in enumerate(d.rows):
        if not _is_perm_of(row, base):
            raise ValueError(f"row {i} is not a permutation of I_{d.m}")
    for t in range(d.n):
        for s in range(t):
            diffs = [a - b for a, b in zip(d.rows[t], d.rows[s])]
            if not _is_perm_of(diffs, base):
                raise ValueError(f"difference list of rows ({t},{s}) is not I_{d.m}")


def asp_to_pdm(a: AspSequence) -> DiffMatrix:
    """Row k of the matrix is the componentwise sum of the first k+1 permutations."""
    _check_asp(a)
    rows = []
    acc = [0] * a.m
    for p in a.perms:
        acc = [s + v for s, v in zip(acc, p)]
        rows.append(tuple(acc))
    return DiffMatrix(tuple(rows), a.m)


def pdm_to_asp(d: DiffMatrix) -> AspSequence:
    """Inverse of asp_to_pdm: successive row differences recover the permutations."""
    _check_pdm_full(d)
    perms = [d.rows[0]]
    for prev, cur in zip(d.rows, d.rows[1:]):
        perms.append(tuple(a - b for a, b in zip(cur, prev)))
    return AspSequence(tuple(perms), d.m)
