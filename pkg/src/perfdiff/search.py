"""Deterministic backtracking solvers for the base difference structures.

Every solver follows the same discipline: bitmask state, a fixed branching
order (largest uncovered difference first, or leftmost free slot for
pairings), an explicit node budget, and full re-verification of any witness
before it is returned.  Exhaustion of the search space and exhaustion of the
budget are distinct outcomes; the latter never certifies nonexistence.

Symmetry reductions used by the matrix engine, both existence-preserving:
  * columns are processed with the first row fixed to the sorted base
    (matrix columns are unordered, so any solution can be column-sorted);
  * at the first processed column the later rows are required to carry
    non-decreasing values (rows 2..n of a solution may be permuted freely).
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core import (
    Block,
    DiffFamily,
    DiffMatrix,
    LangfordPairing,
    ParametricBlock,
    delta_parametric,
    symmetric_values,
)
from . import verify as _verify

FOUND = "found"
EXHAUSTED_NONE = "exhausted_none"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 200_000_000
    max_seconds: float = 600.0
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: object | None
    nodes_explored: int
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def exhausted(self) -> bool:
        return self.status == EXHAUSTED_NONE

    @property
    def budget_exceeded(self) -> bool:
        return self.status == BUDGET_EXCEEDED


class _Budget:
    """Mutable node/time tracker shared by one search run."""

    __slots__ = ("max_nodes", "deadline", "nodes", "stopped")

    def __init__(self, budget: SearchBudget):
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_seconds
        self.nodes = 0
        self.stopped = False

    def step(self) -> bool:
        """Count one node; True while the search may continue."""
        self.nodes += 1
        if self.nodes >= self.max_nodes:
            self.stopped = True
            return False
        if self.nodes % 8192 == 0 and time.monotonic() > self.deadline:
            self.stopped = True
            return False
        return True


def _outcome(tracker: _Budget, witness: object | None, reason: str = "") -> SearchOutcome:
    if witness is not None:
        return SearchOutcome(FOUND, witness, tracker.nodes, reason)
    if tracker.stopped:
        return SearchOutcome(BUDGET_EXCEEDED, None, tracker.nodes, reason or "budget exhausted")
    return SearchOutcome(EXHAUSTED_NONE, None, tracker.nodes, reason)


# ---------------------------------------------------------------------------
# Matrix engine (full and 1-hole perfect difference matrices)
# ---------------------------------------------------------------------------


def _based_matrix_dfs(
    n: int,
    m: int,
    base: Sequence[int],
    tracker: _Budget,
    first_column_split: tuple[int, int] | None = None,
) -> list[tuple[int, ...]] | None:
    """Find rows 2..n over ``base`` completing the sorted first row, or None.

    ``base`` must be a subset of I_m closed under negation; a value v maps to
    bit v + r.  Differences must also land in ``base``.  When
    ``first_column_split`` = (j, k) is given, the first processed column only
    tries its j-th candidate out of every k-th (parallel work split).
    """
    r = (m - 1) // 2
    full = (1 << m) - 1
    base_mask = 0
    for v in base:
        base_mask |= 1 << (v + r)
    blocked = full ^ base_mask  # values and differences that must never appear

    # columns processed outside-in: extreme base values are most constrained
    order = sorted(base, key=lambda v: (-abs(v), v))
    cols = len(base)
    extra = n - 1  # rows beyond the fixed first row

    # used-value mask per extra row; used-difference mask per (row, earlier row)
    used = [blocked] * extra
    dif = [[blocked] * (k + 1) for k in range(extra)]  # dif[k][0] vs first row
    chosen = [[0] * cols for _ in range(extra)]

    def shifted(mask: int, v: int) -> int:
        return mask << v if v >= 0 else mask >> -v

    sentinel = object()

    def fill(col: int, row: int) -> bool:
        if row == extra:
            return solve(col + 1)
        e = order[col]
        cand = ~used[row] & ~shifted(dif[row][0], e) & shifted(full, e) & full
        for l in range(row):
            v = chosen[l][col]
            cand &= ~shifted(dif[row][l + 1], v) & shifted(full, v)
        cand &= full
        if col == 0:
            if row > 0:
                prev = chosen[row - 1][0] + r
                cand &= full ^ ((1 << prev) - 1)  # non-decreasing at column 0
            if first_column_split is not None and row == 0:
                j, k = first_column_split
                picked = 0
                idx = 0
                tmp = cand
                while tmp:
                    lsb = tmp & -tmp
                    if idx % k == j:
                        picked |= lsb
                    tmp ^= lsb
                    idx += 1
                cand = picked
        while cand:
            lsb = cand & -cand
            cand ^= lsb
            if not tracker.step():
                return False
            p = lsb.bit_length() - 1
            v = p - r
            chosen[row][col] = v
            used[row] |= lsb
            dif[row][0] |= 1 << (v - e + r)
            for l in range(row):
                dif[row][l + 1] |= 1 << (v - chosen[l][col] + r)
            if fill(col, row + 1):
                return True
            if tracker.stopped:
                return False
            used[row] ^= lsb
            dif[row][0] ^= 1 << (v - e + r)
            for l in range(row):
                dif[row][l + 1] ^= 1 << (v - chosen[l][col] + r)
        return False

    def solve(col: int) -> bool:
        if col == cols:
            return True
        return fill(col, 0)

    if not solve(0):
        return None
    # emit with columns sorted by the first row
    perm = sorted(range(cols), key=lambda j: order[j])
    rows = [tuple(sorted(base))]
    for k in range(extra):
        rows.append(tuple(chosen[k][j] for j in perm))
    return rows


def _matrix_outcome(
    n: int, m: int, base: Sequence[int], hole: tuple[int, int] | None, tracker: _Budget
) -> SearchOutcome:
    rows = _based_matrix_dfs(n, m, base, tracker)
    witness = None
    if rows is not None:
        witness = DiffMatrix(tuple(rows), m, hole)
        report = _verify.verify_pdm(witness)
        if not report.ok:
            raise RuntimeError(f"search produced an invalid matrix: {report.summary()}")
    return _outcome(tracker, witness)


def _pdm_job(args: tuple[int, int, int, int, float, int]) -> tuple[str, object, int]:
    """Worker for the parallel split; returns (status, rows-or-None, nodes)."""
    n, m, hole_flag, job, seconds, jobs = args
    base = [v for v in symmetric_values(m) if not (hole_flag and v == 0)]
    tracker = _Budget(SearchBudget(max_seconds=seconds, deterministic=False))
    rows = _based_matrix_dfs(n, m, base, tracker, first_column_split=(job, jobs))
    if rows is not None:
        return (FOUND, rows, tracker.nodes)
    if tracker.stopped:
        return (BUDGET_EXCEEDED, None, tracker.nodes)
    return (EXHAUSTED_NONE, None, tracker.nodes)


def _parallel_matrix_search(
    n: int, m: int, hole: tuple[int, int] | None, budget: SearchBudget, jobs: int
) -> SearchOutcome:
    from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait

    args = [(n, m, 1 if hole else 0, j, budget.max_seconds, jobs) for j in range(jobs)]
    nodes = 0
    statuses: list[str] = []
    witness_rows = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = {pool.submit(_pdm_job, a) for a in args}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                status, rows, job_nodes = fut.result()
                nodes += job_nodes
                statuses.append(status)
                if status == FOUND and witness_rows is None:
                    witness_rows = rows
            if witness_rows is not None:
                for fut in pending:
                    fut.cancel()
                break
    if witness_rows is not None:
        witness = DiffMatrix(tuple(witness_rows), m, hole)
        report = _verify.verify_pdm(witness)
        if not report.ok:
            raise RuntimeError(f"search produced an invalid matrix: {report.summary()}")
        return SearchOutcome(FOUND, witness, nodes)
    if any(s == BUDGET_EXCEEDED for s in statuses):
        return SearchOutcome(BUDGET_EXCEEDED, None, nodes, "budget exhausted")
    return SearchOutcome(EXHAUSTED_NONE, None, nodes)


def search_pdm(n: int, m: int, budget: SearchBudget | None = None, jobs: int = 1) -> SearchOutcome:
    """Search a full n-row matrix of odd order m; exhaustion certifies nonexistence."""
    if m % 2 == 0 or m < 1:
        raise ValueError(f"order m must be odd and positive, got {m}")
    if n < 2:
        raise ValueError(f"need at least 2 rows, got {n}")
    budget = budget or SearchBudget()
    if jobs > 1 and not budget.deterministic:
        return _parallel_matrix_search(n, m, None, budget, jobs)
    tracker = _Budget(budget)
    return _matrix_outcome(n, m, list(symmetric_values(m)), None, tracker)


def search_sipdm(m: int, budget: SearchBudget | None = None, jobs: int = 1) -> SearchOutcome:
    """Search a 3-row 1-hole matrix of odd order m (entries I_m minus {0})."""
    if m % 2 == 0 or m < 3:
        raise ValueError(f"order m must be odd and >= 3, got {m}")
    budget = budget or SearchBudget()
    if jobs > 1 and not budget.deterministic:
        return _parallel_matrix_search(3, m, (1, 1), budget, jobs)
    tracker = _Budget(budget)
    base = [v for v in symmetric_values(m) if v != 0]
    return _matrix_outcome(3, m, base, (1, 1), tracker)


# ---------------------------------------------------------------------------
# Pure 4-block perfect difference families, order 12t + 1
# ---------------------------------------------------------------------------


def search_pdf4(t: int, budget: SearchBudget | None = None) -> SearchOutcome:
    """Search t size-4 blocks whose differences cover [1, 6t] exactly once.

    Branches on the largest uncovered difference d, which must be the span of
    a fresh block {0, g1, g1+g2, d}; the mirror block has the same difference
    footprint, so g1 <= g3 canonicalises each block.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    tracker = _Budget(budget or SearchBudget())
    blocks: list[Block] = []

    def dfs(uncovered: int) -> bool:
        if uncovered == 0:
            return True
        d = uncovered.bit_length()  # largest uncovered difference
        for g1 in range(1, (d - 1) // 2 + 1):
            hi = 1 << (g1 - 1)
            if not uncovered & hi:
                continue
            for g2 in range(1, d - 2 * g1 + 1):
                if not tracker.step():
                    return False
                g3 = d - g1 - g2
                acc = hi
                ok = True
                for v in (g2, g3, g1 + g2, g2 + g3, d):
                    bit = 1 << (v - 1)
                    if (acc & bit) or not (uncovered & bit):
                        ok = False
                        break
                    acc |= bit
                if not ok:
                    continue
                blocks.append(Block((0, g1, g1 + g2, d)))
                if dfs(uncovered ^ acc):
                    return True
                blocks.pop()
                if tracker.stopped:
                    return False
        return False

    witness = None
    if dfs((1 << (6 * t)) - 1):
        fam = DiffFamily(tuple(sorted(blocks, key=lambda b: b.elems)), "pdf", g=12 * t + 1)
        report = _verify.verify_pdf(fam, 12 * t + 1)
        if not report.ok:
            raise RuntimeError(f"search produced an invalid family: {report.summary()}")
        witness = fam
    return _outcome(tracker, witness)


# ---------------------------------------------------------------------------
# Variable 4-block families (blocks {0, a, x+b, x+c})
# ---------------------------------------------------------------------------


def search_variable_pdf(t: int, budget: SearchBudget | None = None) -> SearchOutcome:
    """Search t shifted blocks covering [1, 2t] and [x+2t+1, x+6t] exactly.

    Each block consumes two constant differences (a and c - b) from [1, 2t]
    and four shift offsets {c, c-a, c-d, c-a-d} from [2t+1, 6t], with
    d = c - b.  Swapping the roles of a and d mirrors the block without
    changing its footprint, so a < d canonicalises each block.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    tracker = _Budget(budget or SearchBudget())
    lo = 2 * t + 1
    blocks: list[ParametricBlock] = []

    def dfs(const_avail: int, x_needed: int) -> bool:
        if x_needed == 0:
            return True
        c = (x_needed.bit_length() - 1) + lo  # largest still-needed offset
        avail = []
        tmp = const_avail
        while tmp:
            lsb = tmp & -tmp
            avail.append(lsb.bit_length())
            tmp ^= lsb
        for ia, a in enumerate(avail):
            for d in avail[ia + 1 :]:
                if not tracker.step():
                    return False
                if c - a - d < lo:
                    continue
                acc = 1 << (c - lo)
                ok = True
                for o in (c - a, c - d, c - a - d):
                    bit = 1 << (o - lo)
                    if (acc & bit) or not (x_needed & bit):
                        ok = False
                        break
                    acc |= bit
                if not ok:
                    continue
                blocks.append(
                    ParametricBlock(((0, 0), (0, a), (1, c - d), (1, c)))
                )
                if dfs(const_avail ^ (1 << (a - 1)) ^ (1 << (d - 1)), x_needed ^ acc):
                    return True
                blocks.pop()
                if tracker.stopped:
                    return False
        return False

    witness = None
    if dfs((1 << (2 * t)) - 1, (1 << (4 * t)) - 1):
        out = tuple(sorted(blocks, key=lambda b: b.elems))
        report = _verify.verify_variable_pdf(out, t)
        if not report.ok:
            raise RuntimeError(f"search produced an invalid family: {report.summary()}")
        witness = out
    return _outcome(tracker, witness)


# ---------------------------------------------------------------------------
# Shifted hole covers: t size-4 blocks covering [1, r1] and [x+r1+1, x+6t]
# ---------------------------------------------------------------------------


def search_parametric_pdp(r1: int, t: int, budget: SearchBudget | None = None) -> SearchOutcome:
    """Search t blocks, mixed shapes, covering [1, r1] plus [x+r1+1, x+6t].

    Shapes by number of shifted elements: two shifted (2 constant + 4 shift
    differences), one shifted (3 + 3) and none (6 + 0).  Blocks with three
    shifted elements mirror to the one-shifted shape with an identical
    footprint, so they are never generated.  Branches on the largest
    uncovered shift offset until none remain, then covers the constant
    leftovers with unshifted blocks, largest difference first.
    """
    if r1 < 1 or t < 1:
        raise ValueError(f"need r1 >= 1 and t >= 1, got ({r1}, {t})")
    if 6 * t <= r1:
        raise ValueError(f"no shift band: 6t = {6 * t} must exceed r1 = {r1}")
    tracker = _Budget(budget or SearchBudget())
    lo = r1 + 1
    blocks: list[ParametricBlock] = []

    def const_values(mask: int) -> list[int]:
        out = []
        while mask:
            lsb = mask & -mask
            out.append(lsb.bit_length())
            mask ^= lsb
        return out

    def dfs(const_avail: int, x_needed: int, remaining: int) -> bool:
        if x_needed == 0 and const_avail == 0:
            return remaining == 0
        xn = bin(x_needed).count("1")
        if xn > 4 * remaining or xn in (1, 2, 5):
            return False
        if x_needed:
            c = (x_needed.bit_length() - 1) + lo
            avail = const_values(const_avail)
            # two shifted elements: {0, a, x+c-d, x+c}
            for ia, a in enumerate(avail):
                for d in avail[ia + 1 :]:
                    if not tracker.step():
                        return False
                    if c - a - d < lo:
                        continue
                    acc = 1 << (c - lo)
                    ok = True
                    for o in (c - a, c - d, c - a - d):
                        bit = 1 << (o - lo)
                        if (acc & bit) or not (x_needed & bit):
                            ok = False
                            break
                        acc |= bit
                    if not ok:
                        continue
                    blocks.append(ParametricBlock(((0, 0), (0, a), (1, c - d), (1, c))))
                    if dfs(
                        const_avail ^ (1 << (a - 1)) ^ (1 << (d - 1)),
                        x_needed ^ acc,
                        remaining - 1,
                    ):
                        return True
                    blocks.pop()
                    if tracker.stopped:
                        return False
            # one shifted element: {0, alpha, beta, x+c}
            for ia, alpha in enumerate(avail):
                for beta in avail[ia + 1 :]:
                    if not tracker.step():
                        return False
                    gap = beta - alpha
                    if gap == alpha or gap == beta or not const_avail & (1 << (gap - 1)):
                        continue
                    if c - beta < lo:
                        continue
                    acc = 1 << (c - lo)
                    ok = True
                    for o in (c - alpha, c - beta):
                        bit = 1 << (o - lo)
                        if (acc & bit) or not (x_needed & bit):
                            ok = False
                            break
                        acc |= bit
                    if not ok:
                        continue
                    blocks.append(ParametricBlock(((0, 0), (0, alpha), (0, beta), (1, c))))
                    if dfs(
                        const_avail
                        ^ (1 << (alpha - 1))
                        ^ (1 << (beta - 1))
                        ^ (1 << (gap - 1)),
                        x_needed ^ acc,
                        remaining - 1,
                    ):
                        return True
                    blocks.pop()
                    if tracker.stopped:
                        return False
            return False
        # no shifted offsets left: plain blocks {0, g1, g1+g2, d}
        d = const_avail.bit_length()
        for g1 in range(1, (d - 1) // 2 + 1):
            if not const_avail & (1 << (g1 - 1)):
                continue
            for g2 in range(1, d - 2 * g1 + 1):
                if not tracker.step():
                    return False
                g3 = d - g1 - g2
                acc = 1 << (g1 - 1)
                ok = True
                for v in (g2, g3, g1 + g2, g2 + g3, d):
                    bit = 1 << (v - 1)
                    if (acc & bit) or not (const_avail & bit):
                        ok = False
                        break
                    acc |= bit
                if not ok:
                    continue
                blocks.append(
                    ParametricBlock(((0, 0), (0, g1), (0, g1 + g2), (0, d)))
                )
                if dfs(const_avail ^ acc, 0, remaining - 1):
                    return True
                blocks.pop()
                if tracker.stopped:
                    return False
        return False

    witness = None
    if dfs((1 << r1) - 1, (1 << (6 * t - r1)) - 1, t):
        out = tuple(sorted(blocks, key=lambda b: b.elems))
        report = _verify.verify_parametric_pdp(out, r1, t)
        if not report.ok:
            raise RuntimeError(f"search produced an invalid cover: {report.summary()}")
        witness = out
    return _outcome(tracker, witness)


# ---------------------------------------------------------------------------
# Perfect Langford pairings
# ---------------------------------------------------------------------------


def langford_feasible(s: int, c: int) -> bool:
    """Size and parity conditions for a pairing of [1, 2s] with gaps [c, c+s-1]."""
    if s < 2 * c - 1:
        return False
    return s % 4 in ((0, 1) if c % 2 else (0, 3))


def search_langford(
    s: int,
    c: int,
    budget: SearchBudget | None = None,
    use_feasibility: bool = True,
) -> SearchOutcome:
    """Search a pairing of [1, 2s] realizing the gaps [c, c+s-1] once each.

    Known-infeasible parameters short-circuit to exhaustion with the rule
    named in the reason (pass use_feasibility=False to force enumeration).
    Branching fills the lowest free position, trying the largest free gap
    first.
    """
    if s < 1 or c < 1:
        raise ValueError(f"s and c must be positive, got ({s}, {c})")
    tracker = _Budget(budget or SearchBudget())
    if use_feasibility and not langford_feasible(s, c):
        reason = (
            f"size rule: s={s} < 2c-1={2 * c - 1}"
            if s < 2 * c - 1
            else f"parity rule: s={s} mod 4 incompatible with {'odd' if c % 2 else 'even'} c={c}"
        )
        return SearchOutcome(EXHAUSTED_NONE, None, 0, reason)

    top = 2 * s
    pairs: list[tuple[int, int]] = []

    def dfs(free: int, gaps: int) -> bool:
        if free == 0:
            return True
        p = (free & -free).bit_length()  # lowest free position must open a pair
        tmp = gaps
        while tmp:
            hi = tmp.bit_length() - 1
            tmp ^= 1 << hi
            if not tracker.step():
                return False
            d = c + hi
            q = p + d
            if q > top or not free & (1 << (q - 1)):
                continue
            pairs.append((p, q))
            if dfs(free ^ (1 << (p - 1)) ^ (1 << (q - 1)), gaps ^ (1 << hi)):
                return True
            pairs.pop()
            if tracker.stopped:
                return False
        return False

    witness = None
    if dfs((1 << top) - 1, (1 << s) - 1):
        pairing = LangfordPairing(s, c, tuple(sorted(pairs)))
        report = _verify.verify_langford(pairing)
        if not report.ok:
            raise RuntimeError(f"search produced an invalid pairing: {report.summary()}")
        witness = pairing
    return _outcome(tracker, witness)


# ---------------------------------------------------------------------------
# Naive enumerators: independent cross-checks for the smallest instances
# ---------------------------------------------------------------------------


def naive_search_sipdm(m: int, fix_first_row: bool = True) -> tuple[DiffMatrix | None, int]:
    """Plain enumeration over row permutations, full check of each candidate.

    With fix_first_row the first row is the sorted base (column sorting keeps
    exhaustiveness); without it all three rows range over every permutation,
    which is only sensible for m = 5.  Returns (witness or None, candidates).
    """
    base = tuple(v for v in symmetric_values(m) if v != 0)
    firsts: Iterable[tuple[int, ...]] = [base] if fix_first_row else itertools.permutations(base)
    want = sorted(base)
    checked = 0
    for row1 in firsts:
        for row2 in itertools.permutations(base):
            for row3 in itertools.permutations(base):
                checked += 1
                rows = (row1, row2, row3)
                good = all(sorted(x) == want for x in rows)
                for t in range(3):
                    for st in range(t):
                        if not good:
                            break
                        good = sorted(a - b for a, b in zip(rows[t], rows[st])) == want
                if good:
                    return DiffMatrix(rows, m, (1, 1)), checked
    return None, checked


def naive_search_pdf4(t: int) -> tuple[DiffFamily | None, int]:
    """Enumerate every t-set of candidate blocks inside [0, 6t]; t <= 2 scale."""
    top = 6 * t
    cands = []
    for a in range(1, top + 1):
        for b in range(a + 1, top + 1):
            for c in range(b + 1, top + 1):
                diffs = (a, b, c, b - a, c - a, c - b)
                if len(set(diffs)) == 6:
                    cands.append(Block((0, a, b, c)))
    want = Counter(range(1, top + 1))
    checked = 0
    for combo in itertools.combinations(cands, t):
        checked += 1
        diffs: Counter = Counter()
        for blk in combo:
            e = blk.elems
            diffs.update(e[i] - e[j] for i in range(1, 4) for j in range(i))
        if diffs == want:
            return DiffFamily(tuple(combo), "pdf", g=12 * t + 1), checked
    return None, checked


def naive_search_langford(s: int, c: int) -> tuple[LangfordPairing | None, int]:
    """Enumerate every perfect matching of [1, 2s] and test its gap set."""
    want = set(range(c, c + s))
    checked = 0

    def matchings(avail: tuple[int, ...]):
        if not avail:
            yield []
            return
        first = avail[0]
        for i in range(1, len(avail)):
            rest = avail[1:i] + avail[i + 1 :]
            for rest_pairs in matchings(rest):
                yield [(first, avail[i])] + rest_pairs

    for pairing in matchings(tuple(range(1, 2 * s + 1))):
        checked += 1
        gaps = {f - e for e, f in pairing}
        if len(gaps) == s and gaps == want:
            return LangfordPairing(s, c, tuple(sorted(pairing))), checked
    return None, checked
