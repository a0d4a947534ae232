"""Exact oracles deciding whether a candidate object satisfies its definition.

These checks are the ground truth for every other module: constructions and
searches re-verify their outputs here.  Verifiers report all violations
instead of throwing, and they never normalize their input.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    AspSequence,
    Block,
    DiffFamily,
    DiffMatrix,
    LangfordPairing,
    ParametricBlock,
    delta_blocks,
    delta_parametric,
    symmetric_values,
)


@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str
    values: tuple = ()


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.rule}: {v.detail}" for v in self.violations)


def _report(violations: list[Violation]) -> VerifyReport:
    return VerifyReport(ok=not violations, violations=tuple(violations))


def _check_cover(
    diffs: Sequence[int], expected: Iterable[int], rule: str, out: list[Violation]
) -> None:
    """Compare a difference multiset with an expected set, each value once."""
    have = Counter(diffs)
    want = Counter(expected)
    dup = sorted(v for v, k in have.items() if k > 1)
    if dup:
        out.append(Violation(rule, "differences repeated", tuple(dup)))
    extra = sorted((have - want).keys())
    if extra:
        out.append(Violation(rule, "differences outside the target set", tuple(extra)))
    missing = sorted((want - have).keys())
    if missing:
        out.append(Violation(rule, "target differences not covered", tuple(missing)))


def _concrete_delta(f: DiffFamily, out: list[Violation]) -> list[int] | None:
    if not f.is_concrete():
        out.append(Violation("blocks", "family contains blocks with the formal shift x"))
        return None
    return delta_blocks(f.blocks)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def verify_pdf(f: DiffFamily, g: int) -> VerifyReport:
    """Perfect difference family: differences cover [1, (g-1)/2] exactly once."""
    out: list[Violation] = []
    if g < 3 or g % 2 == 0:
        out.append(Violation("params", f"order g must be odd and >= 3, got {g}"))
        return _report(out)
    diffs = _concrete_delta(f, out)
    if diffs is not None:
        _check_cover(diffs, range(1, (g - 1) // 2 + 1), "pdf-cover", out)
    return _report(out)


def verify_pdp(f: DiffFamily, g: int, leave: frozenset[int] | set[int]) -> VerifyReport:
    """Perfect difference packing: covers [1, (g-1)/2] minus the leave exactly."""
    out: list[Violation] = []
    if g < 3 or g % 2 == 0:
        out.append(Violation("params", f"order g must be odd and >= 3, got {g}"))
        return _report(out)
    half = (g - 1) // 2
    leave = frozenset(leave)
    stray = sorted(v for v in leave if not 1 <= v <= half)
    if stray:
        out.append(Violation("leave", "leave values outside [1, (g-1)/2]", tuple(stray)))
    diffs = _concrete_delta(f, out)
    if diffs is not None:
        target = [v for v in range(1, half + 1) if v not in leave]
        _check_cover(diffs, target, "pdp-cover", out)
    return _report(out)


def verify_psds(f: DiffFamily, c: int) -> VerifyReport:
    """Difference components tile {c, ..., c - 1 + sum C(p_i, 2)} exactly."""
    out: list[Violation] = []
    if c < 1:
        out.append(Violation("params", f"threshold c must be positive, got {c}"))
        return _report(out)
    diffs = _concrete_delta(f, out)
    if diffs is not None:
        total = sum(b.size * (b.size - 1) // 2 for b in f.blocks)
        _check_cover(diffs, range(c, c + total), "psds-cover", out)
    return _report(out)


def verify_variable_pdf(blocks: Sequence[ParametricBlock], t: int) -> VerifyReport:
    """Shifted family covering [1, 2t] plus [x + 2t + 1, x + 6t] exactly."""
    out: list[Violation] = []
    if t < 1:
        out.append(Violation("params", f"t must be positive, got {t}"))
        return _report(out)
    if len(blocks) != t:
        out.append(Violation("blocks", f"expected {t} blocks, found {len(blocks)}"))
    bad = [b for b in blocks if b.size != 4]
    if bad:
        out.append(Violation("blocks", "blocks must have size 4", tuple(b.elems for b in bad)))
    pd = delta_parametric(blocks)
    _check_cover(pd.const_diffs, range(1, 2 * t + 1), "const-cover", out)
    _check_cover(pd.x_offsets, range(2 * t + 1, 6 * t + 1), "shift-cover", out)
    return _report(out)


def verify_parametric_pdp(
    blocks: Sequence[ParametricBlock], r1: int, t: int
) -> VerifyReport:
    """Shifted packing of t size-4 blocks covering [1, r1] plus [x+r1+1, x+6t]."""
    out: list[Violation] = []
    if r1 < 1 or t < 1:
        out.append(Violation("params", f"need r1 >= 1 and t >= 1, got ({r1}, {t})"))
        return _report(out)
    if len(blocks) != t:
        out.append(Violation("blocks", f"expected {t} blocks, found {len(blocks)}"))
    bad = [b for b in blocks if b.size != 4]
    if bad:
        out.append(Violation("blocks", "blocks must have size 4", tuple(b.elems for b in bad)))
    pd = delta_parametric(blocks)
    _check_cover(pd.const_diffs, range(1, r1 + 1), "const-cover", out)
    _check_cover(pd.x_offsets, range(r1 + 1, 6 * t + 1), "shift-cover", out)
    return _report(out)


# ---------------------------------------------------------------------------
# Matrices and permutation sequences
# ---------------------------------------------------------------------------


def verify_based_rows(rows: Sequence[Sequence[int]], base: Iterable[int]) -> VerifyReport:
    """Every row and every pairwise row-difference list equals ``base`` exactly."""
    out: list[Violation] = []
    want = sorted(base)
    if not rows:
        out.append(Violation("shape", "no rows"))
        return _report(out)
    if len({len(r) for r in rows}) != 1:
        out.append(Violation("shape", "rows have unequal lengths"))
        return _report(out)
    if len(rows[0]) != len(want):
        out.append(
            Violation("shape", f"rows have {len(rows[0])} entries, base has {len(want)}")
        )
    for i, row in enumerate(rows):
        if sorted(row) != want:
            out.append(Violation("row", f"row {i} is not a permutation of the base", (i,)))
    for t in range(len(rows)):
        for s in range(t):
            diffs = sorted(a - b for a, b in zip(rows[t], rows[s]))
            if diffs != want:
                out.append(
                    Violation(
                        "row-difference",
                        f"difference list of rows ({t},{s}) does not equal the base",
                        (t, s),
                    )
                )
    return _report(out)


def verify_pdm(d: DiffMatrix) -> VerifyReport:
    """Perfect difference matrix, with or without a declared regular hole."""
    out: list[Violation] = []
    expected_cols = d.m - (d.hole[1] if d.hole else 0)
    if d.cols != expected_cols:
        out.append(Violation("shape", f"expected {expected_cols} columns, found {d.cols}"))
    inner = verify_based_rows(d.rows, d.base_values())
    out.extend(inner.violations)
    return _report(out)


def verify_asp(a: AspSequence) -> VerifyReport:
    """Every consecutive run of permutations sums to a permutation of I_m."""
    out: list[Violation] = []
    want = list(symmetric_values(a.m))
    for lo in range(a.n):
        acc = [0] * a.m
        for hi in range(lo, a.n):
            acc = [s + v for s, v in zip(acc, a.perms[hi])]
            if sorted(acc) != want:
                out.append(
                    Violation(
                        "run-sum",
                        f"sum of permutations {lo}..{hi} is not a permutation of I_{a.m}",
                        (lo, hi),
                    )
                )
    return _report(out)


# ---------------------------------------------------------------------------
# Langford pairings
# ---------------------------------------------------------------------------


def verify_langford(p: LangfordPairing) -> VerifyReport:
    """Pairs partition [1, 2s] and their gaps hit [c, c+s-1] once each."""
    out: list[Violation] = []
    if len(p.pairs) != p.s:
        out.append(Violation("shape", f"expected {p.s} pairs, found {len(p.pairs)}"))
    flat = [v for pair in p.pairs for v in pair]
    if sorted(flat) != list(range(1, 2 * p.s + 1)):
        out.append(Violation("partition", "pairs do not partition [1, 2s]", tuple(sorted(flat))))
    backwards = [pair for pair in p.pairs if pair[1] <= pair[0]]
    if backwards:
        out.append(Violation("pairs", "each pair needs e < f", tuple(backwards)))
    gaps = [f - e for e, f in p.pairs]
    _check_cover(gaps, range(p.c, p.c + p.s), "gap-cover", out)
    return _report(out)
