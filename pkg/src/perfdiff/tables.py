"""Embedded catalog data: published block lists, recipe tables and exception sets.

All data here is integer-exact and guarded by a checksum (``audit_tables``).
Tests re-verify every block list against the difference-cover oracles, so a
transcription slip cannot survive the suite.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Mapping, Sequence

# ---------------------------------------------------------------------------
# Small mixed {3,4} families: blocks of the (6h+1, {3,4}, 1) family per h.
# Every family has weight-4 ratio >= 1/3 and differences covering [1, 3h].
# ---------------------------------------------------------------------------

SMALL_MIXED_PDFS: Mapping[int, tuple[tuple[int, ...], ...]] = {
    3: ((0, 1, 8), (0, 3, 5, 9)),
    4: ((0, 5, 11), (0, 4, 12), (0, 1, 3, 10)),
    5: ((0, 4, 15), (0, 1, 6, 14), (0, 2, 9, 12)),
    6: ((0, 5, 16), (0, 6, 18), (0, 1, 4, 14), (0, 2, 9, 17)),
    7: ((0, 8, 20), (0, 1, 10, 15), (0, 2, 18, 21), (0, 4, 11, 17)),
    9: ((0, 8, 24), (0, 1, 4, 22), (0, 2, 11, 25), (0, 6, 19, 26), (0, 10, 15, 27)),
    11: (
        (0, 8, 24), (0, 1, 3, 29), (0, 5, 23, 30), (0, 6, 20, 33),
        (0, 9, 19, 31), (0, 11, 15, 32),
    ),
    13: (
        (0, 11, 33), (0, 29, 32, 39), (0, 5, 19, 31), (0, 6, 30, 34),
        (0, 1, 21, 37), (0, 8, 17, 35), (0, 13, 15, 38),
    ),
    15: (
        (0, 13, 39), (0, 8, 35, 38), (0, 4, 18, 41), (0, 17, 33, 45),
        (0, 10, 42, 44), (0, 1, 6, 25), (0, 7, 22, 43), (0, 9, 29, 40),
    ),
    17: (
        (0, 13, 39), (0, 14, 37, 47), (0, 12, 15, 44), (0, 11, 42, 49),
        (0, 28, 48, 50), (0, 6, 24, 51), (0, 4, 21, 40), (0, 5, 30, 46),
        (0, 8, 9, 43),
    ),
    19: (
        (0, 19, 56), (0, 8, 32, 48), (0, 9, 36, 54), (0, 42, 47, 57),
        (0, 23, 49, 51), (0, 22, 35, 52), (0, 3, 34, 41), (0, 4, 29, 50),
        (0, 11, 12, 55), (0, 14, 20, 53),
    ),
    21: (
        (0, 19, 62), (0, 7, 28, 42), (0, 9, 36, 54), (0, 10, 40, 60),
        (0, 11, 34, 63), (0, 15, 41, 47), (0, 13, 44, 46), (0, 1, 5, 58),
        (0, 3, 51, 59), (0, 12, 37, 61), (0, 16, 38, 55),
    ),
    23: (
        (0, 19, 68), (0, 7, 28, 42), (0, 9, 36, 54), (0, 10, 40, 60),
        (0, 11, 44, 66), (0, 5, 39, 62), (0, 16, 64, 67), (0, 8, 37, 61),
        (0, 25, 31, 63), (0, 1, 47, 59), (0, 2, 17, 43), (0, 4, 56, 69),
    ),
    25: (
        (0, 23, 72), (0, 9, 36, 54), (0, 10, 40, 60), (0, 11, 44, 66),
        (0, 52, 57, 64), (0, 15, 58, 74), (0, 13, 41, 75), (0, 37, 68, 69),
        (0, 42, 46, 71), (0, 17, 38, 73), (0, 39, 63, 65), (0, 3, 51, 70),
        (0, 8, 14, 61),
    ),
    27: (
        (0, 1, 81), (0, 36, 55, 70), (0, 14, 22, 73), (0, 17, 67, 79),
        (0, 41, 66, 76), (0, 27, 56, 60), (0, 16, 68, 77), (0, 11, 58, 64),
        (0, 28, 49, 54), (0, 23, 63, 65), (0, 3, 48, 72), (0, 37, 57, 75),
        (0, 7, 46, 78), (0, 30, 43, 74),
    ),
    29: (
        (0, 29, 86), (0, 11, 44, 66), (0, 12, 48, 72), (0, 13, 52, 78),
        (0, 14, 56, 84), (0, 4, 63, 73), (0, 3, 38, 85), (0, 2, 21, 79),
        (0, 49, 64, 80), (0, 1, 41, 75), (0, 20, 81, 87), (0, 27, 32, 50),
        (0, 9, 54, 71), (0, 8, 51, 76), (0, 30, 37, 83),
    ),
    31: (
        (0, 1, 93), (0, 33, 55, 85), (0, 21, 57, 89), (0, 45, 61, 71),
        (0, 7, 51, 90), (0, 3, 63, 80), (0, 14, 67, 86), (0, 2, 58, 78),
        (0, 38, 47, 75), (0, 64, 69, 82), (0, 4, 66, 74), (0, 48, 79, 91),
        (0, 6, 46, 87), (0, 34, 59, 88), (0, 11, 35, 84), (0, 15, 42, 65),
    ),
    33: (
        (0, 1, 99), (0, 46, 68, 81), (0, 14, 90, 93), (0, 11, 75, 94),
        (0, 21, 47, 88), (0, 7, 69, 96), (0, 36, 74, 78), (0, 20, 63, 65),
        (0, 31, 48, 97), (0, 33, 73, 91), (0, 29, 59, 82), (0, 56, 71, 95),
        (0, 51, 57, 85), (0, 16, 60, 70), (0, 12, 84, 92), (0, 32, 37, 87),
        (0, 9, 61, 86),
    ),
    35: (
        (0, 1, 105), (0, 12, 87, 91), (0, 15, 57, 64), (0, 26, 61, 100),
        (0, 9, 59, 92), (0, 54, 68, 98), (0, 2, 84, 95), (0, 16, 34, 85),
        (0, 6, 76, 103), (0, 41, 81, 101), (0, 8, 71, 96), (0, 10, 62, 90),
        (0, 43, 46, 99), (0, 45, 58, 77), (0, 22, 89, 94), (0, 31, 55, 78),
        (0, 36, 73, 102), (0, 21, 38, 86),
    ),
    39: (
        (0, 1, 117), (0, 3, 66, 101), (0, 44, 86, 93), (0, 20, 57, 103),
        (0, 15, 99, 115), (0, 9, 70, 111), (0, 34, 64, 114), (0, 5, 22, 96),
        (0, 12, 72, 104), (0, 27, 51, 105), (0, 52, 97, 110), (0, 23, 59, 112),
        (0, 18, 28, 113), (0, 2, 6, 75), (0, 38, 81, 106), (0, 39, 65, 94),
        (0, 62, 76, 109), (0, 40, 88, 107), (0, 8, 79, 90), (0, 21, 77, 108),
    ),
}

# h values whose (6h+1, 4, 1) family exists, so the small-range planner can
# use a pure 4-block family instead of the mixed lists above.
SMALL_RANGE_H = tuple(sorted(set(range(2, 37)) | {38, 39, 42}))

# ---------------------------------------------------------------------------
# Incomplete matrix of order 19, compact form: each column (a, b, c) stands
# for the three rotated columns (a, b, c), (b, c, a), (c, a, b).
# ---------------------------------------------------------------------------

SIPDM19_COMPACT: tuple[tuple[int, int, int], ...] = (
    (-9, -8, -5),
    (-7, 1, -4),
    (-6, -2, 3),
    (-3, 6, 4),
    (-1, 5, 7),
    (8, 2, 9),
)

# ---------------------------------------------------------------------------
# Recursive recipes for matrix orders in [203, 999] that are not products of
# known orders.  Rules: "c1" m = m1(m2+1)-1, "c11" m = m1(m2+1)+1, and
# "gadget" m = m1(m2-1)+12t+1 via a shifted 1-hole cover (m1 omitted, derived
# from the gadget family below).
# ---------------------------------------------------------------------------

# rows: m -> (m1 or None, m2, rule)
TABLE_PRIME: Mapping[int, tuple[int | None, int, str]] = {
    211: (15, 13, "c11"), 223: (7, 31, "c1"), 233: (13, 17, "c1"),
    239: (17, 13, "c11"), 269: (15, 17, "c1"), 271: (15, 17, "c11"),
    281: (7, 39, "c11"), 283: (None, 55, "gadget"), 293: (21, 13, "c1"),
    307: (17, 17, "c11"), 311: (13, 23, "c1"), 313: (13, 23, "c11"),
    337: (13, 25, "c1"), 349: (25, 13, "c1"), 353: (None, 69, "gadget"),
    359: (15, 23, "c1"), 379: (19, 19, "c1"), 389: (15, 25, "c1"),
    409: (17, 23, "c11"), 419: (21, 19, "c1"), 421: (21, 19, "c11"),
    433: (31, 13, "c1"), 443: (17, 25, "c11"), 449: (25, 17, "c1"),
    457: (19, 23, "c11"), 461: (7, 65, "c1"), 463: (7, 65, "c11"),
    467: (None, 23, "gadget"), 479: (15, 31, "c1"), 487: (27, 17, "c11"),
    491: (35, 13, "c11"), 499: (25, 19, "c1"), 503: (21, 23, "c1"),
    509: (15, 33, "c1"), 521: (29, 17, "c1"), 523: (29, 17, "c11"),
    541: (27, 19, "c11"), 547: (39, 13, "c11"), 557: (31, 17, "c1"),
    563: (None, 111, "gadget"), 569: (15, 37, "c1"), 571: (15, 37, "c11"),
    577: (17, 33, "c1"), 593: (33, 17, "c1"), 599: (25, 23, "c1"),
    601: (25, 23, "c11"), 607: (19, 31, "c1"), 613: (None, 121, "gadget"),
    619: (31, 19, "c1"), 631: (45, 13, "c11"), 643: (7, 91, "c1"),
    647: (27, 23, "c1"), 653: (None, 129, "gadget"), 659: (33, 19, "c1"),
    661: (33, 19, "c11"), 673: (21, 31, "c11"), 677: (None, 17, "gadget"),
    683: (None, 135, "gadget"), 691: (15, 45, "c11"), 701: (35, 19, "c11"),
    727: (13, 55, "c1"), 733: (None, 145, "gadget"), 739: (37, 19, "c1"),
    743: (31, 23, "c1"), 751: (15, 49, "c11"), 761: (19, 39, "c11"),
    769: (55, 13, "c1"), 773: (43, 17, "c1"), 787: (None, 19, "gadget"),
    797: (57, 13, "c1"), 809: (45, 17, "c1"), 811: (45, 17, "c11"),
    821: (41, 19, "c11"), 823: (None, 163, "gadget"), 827: (59, 13, "c11"),
    839: (21, 39, "c1"), 853: (61, 13, "c1"), 857: (33, 25, "c1"),
    859: (43, 19, "c1"), 863: (27, 31, "c1"), 881: (49, 17, "c1"),
    883: (13, 67, "c1"), 887: (37, 23, "c1"), 907: (None, 19, "gadget"),
    911: (65, 13, "c11"), 919: (23, 39, "c1"), 929: (29, 31, "c11"),
    937: (67, 13, "c1"), 941: (47, 19, "c11"), 953: (53, 17, "c1"),
    967: (23, 41, "c11"), 983: (41, 23, "c1"), 991: (31, 31, "c1"),
}

TABLE_3P: Mapping[int, tuple[int | None, int, str]] = {
    213: (None, 41, "gadget"), 237: (17, 13, "c1"), 267: (19, 13, "c11"),
    309: (7, 43, "c11"), 321: (23, 13, "c1"), 339: (17, 19, "c1"),
    381: (19, 19, "c11"), 393: (7, 55, "c11"), 417: (13, 31, "c11"),
    453: (None, 89, "gadget"), 489: (35, 13, "c1"), 501: (25, 19, "c11"),
    519: (13, 39, "c1"), 537: (None, 17, "gadget"), 543: (17, 31, "c1"),
    573: (41, 13, "c1"), 579: (29, 19, "c1"), 597: (23, 25, "c1"),
    633: (None, 125, "gadget"), 681: (17, 39, "c11"), 687: (49, 13, "c11"),
    699: (35, 19, "c1"), 723: (19, 37, "c11"), 753: (29, 25, "c1"),
    771: (55, 13, "c11"), 807: (31, 25, "c11"), 813: (None, 161, "gadget"),
    843: (None, 167, "gadget"), 849: (25, 33, "c1"), 921: (23, 39, "c11"),
    933: (None, 185, "gadget"), 939: (47, 19, "c1"), 951: (17, 55, "c1"),
    993: (71, 13, "c1"),
}

TABLE_9P: Mapping[int, tuple[int | None, int, str]] = {
    261: (13, 19, "c11"), 279: (7, 39, "c1"), 333: (None, 65, "gadget"),
    477: (7, 67, "c11"), 549: (None, 17, "gadget"), 603: (43, 13, "c11"),
    657: (47, 13, "c1"), 711: (None, 23, "gadget"), 747: (17, 43, "c1"),
    801: (25, 31, "c11"), 873: (23, 37, "c1"), 909: (13, 69, "c1"),
    927: (29, 31, "c1"), 963: (37, 25, "c11"), 981: (49, 19, "c11"),
}

TABLE_11P: Mapping[int, tuple[int | None, int, str]] = {
    209: (15, 13, "c1"), 253: (None, 49, "gadget"), 341: (19, 17, "c1"),
    407: (17, 23, "c1"), 451: (25, 17, "c11"), 473: (None, 93, "gadget"),
    517: (37, 13, "c1"), 583: (None, 115, "gadget"), 649: (13, 49, "c1"),
    671: (21, 31, "c1"), 737: (41, 17, "c1"), 781: (23, 33, "c1"),
    803: (None, 159, "gadget"), 869: (15, 57, "c1"), 913: (None, 181, "gadget"),
    979: (49, 19, "c1"),
}


def all_table_rows() -> dict[int, tuple[int | None, int, str]]:
    merged: dict[int, tuple[int | None, int, str]] = {}
    for table in (TABLE_PRIME, TABLE_3P, TABLE_9P, TABLE_11P):
        merged.update(table)
    return merged


# ---------------------------------------------------------------------------
# Shifted hole-cover families (r1, t): t size-4 blocks in the formal shift x
# whose differences cover [1, r1] and [x + r1 + 1, x + 6t].  Their target
# order is m = m1(m2-1) + 12t + 1 with m1 = 2 r1 + 1.
# ---------------------------------------------------------------------------

GADGET_FAMILIES: tuple[tuple[int, int], ...] = (
    (2, 1), (9, 4), (14, 6), (14, 7), (18, 7), (19, 7), (22, 8),
)

# The printed single-block gadget for (r1, t) = (2, 1).
GADGET_2_1: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (1, 4), (1, 6))


def gadget_order(r1: int, t: int, m2: int) -> int:
    return (2 * r1 + 1) * (m2 - 1) + 12 * t + 1


def resolve_gadget(m: int, m2: int) -> tuple[int, int] | None:
    """Find the (r1, t) family a table row with rule "gadget" refers to."""
    for r1, t in GADGET_FAMILIES:
        if gadget_order(r1, t, m2) == m:
            return (r1, t)
    return None


# ---------------------------------------------------------------------------
# Direct orders from pure 4-block families and from the triple-scale recipe.
# ---------------------------------------------------------------------------

# m = 12t + 1 built from a (12t+1, 4, 1) family
S5_PSDS_T: tuple[int, ...] = (19, 20, 23, 31, 33, 59, 63, 69, 73, 83)

# m = 12(m2 + t) + 15, m2 = 2 r2 + 1, via the triple-scale recipe with a
# shifted hole-cover family (r2, t) and a full order-27 matrix as filler.
S5_TRIPLE_PAIRS: tuple[tuple[int, int], ...] = (
    (9, 4), (12, 6), (13, 6), (14, 7), (15, 7), (17, 8), (19, 9), (21, 9),
    (27, 13), (30, 11),
)


def triple_scale_order(r2: int, t: int) -> int:
    return 12 * ((2 * r2 + 1) + t) + 15


S5_ORDERS: tuple[int, ...] = tuple(
    sorted([12 * t + 1 for t in S5_PSDS_T] + [triple_scale_order(r2, t) for r2, t in S5_TRIPLE_PAIRS])
)

# ---------------------------------------------------------------------------
# Exception bookkeeping for 3-row matrices of odd order below 1000.
# ---------------------------------------------------------------------------

NONEXISTENT_PDM3 = (9, 11)

EXCEPTIONS_PRIME: tuple[int, ...] = (
    227, 229, 241, 251, 257, 263, 277, 317, 331, 347, 367, 373, 383, 397, 401,
    431, 439, 587, 617, 641, 677, 709, 719, 757, 877, 947, 971, 977, 997,
)
EXCEPTIONS_3P: tuple[int, ...] = (
    219, 249, 291, 303, 327, 471, 591, 669, 717, 789, 829, 831, 879,
)
EXCEPTIONS_9P: tuple[int, ...] = (207, 369, 387, 423, 639)
EXCEPTIONS_EXTRA: tuple[int, ...] = (243, 297, 319, 363)

# The final open list: 33 odd orders below 1000 with no known 3-row matrix.
OPEN_PDM3: tuple[int, ...] = (
    207, 219, 227, 243, 249, 251, 257, 263, 297, 303, 317, 319, 327, 331, 347,
    363, 367, 369, 383, 401, 423, 431, 439, 587, 617, 641, 669, 717, 719, 789,
    947, 971, 977,
)

# Odd orders with a directly known 3-row matrix (the multiplication base).
BASE_PDM_ORDERS: tuple[int, ...] = (5, 7) + tuple(range(13, 202, 2))

# ---------------------------------------------------------------------------
# Availability of 1-hole incomplete matrices SIPDM(3, m, 1) for odd m < 200:
# where each known order comes from, for planning import slots.
# ---------------------------------------------------------------------------

SIPDM_FROM_PDF: tuple[int, ...] = (13, 49, 61, 73, 85, 97, 109, 121, 133, 145, 157, 169, 181, 193)
SIPDM_PAPER_DATA: tuple[int, ...] = (19,)
SIPDM_IMPORTED: tuple[int, ...] = tuple(
    sorted(
        {17}
        | {57, 65, 69, 77, 81, 89, 93, 101, 105, 113, 117, 125, 129, 137, 141, 149}
        | {31, 33, 37, 39, 43, 55, 67, 79}
        | {23, 25, 41, 45, 91, 99, 103, 107, 111, 115, 119, 123, 127, 131, 135,
           139, 143, 147, 151, 153, 155, 159, 161, 163, 165, 167, 171, 173,
           175, 177, 179, 183, 185, 187, 189, 191, 195, 197, 199}
    )
)
SIPDM_NONEXISTENT: tuple[int, ...] = (5, 7, 9, 11)
SIPDM_UNKNOWN: tuple[int, ...] = (15, 21, 27, 29, 35, 47, 51, 53, 59, 63, 71, 75, 83, 87, 95)

# ---------------------------------------------------------------------------
# Mixed-family composition: admissible (t, s) pairs and the scale-up offsets.
# ---------------------------------------------------------------------------

Y_EVEN: tuple[int, ...] = (0, 1, 4, 12, 13)   # s = 0 (mod 4)
Y_ODD: tuple[int, ...] = (0, 3, 4, 11, 12)    # s = 1 (mod 4)

MIDDLE_H_EXTRA: tuple[int, ...] = (37, 40, 41, 242, 243, 246, 247, 250, 251, 254, 255)


def compose_parameters(h: int) -> tuple[int, int] | None:
    """Smallest (t, s) with h = s + 2t admissible for the direct composition.

    s must be 0 or 1 mod 4 with the block counts in the feasible window
    (4-block count t in [6, 17], pairing start 2t + 1, ratio >= 1/14).
    """
    for t in range(6, 18):
        s = h - 2 * t
        if s < 1:
            continue
        if s % 4 == 0:
            e = s // 4
            if t + 1 <= e <= (13 * t) // 4:
                return (t, s)
        elif s % 4 == 1:
            e = (s - 1) // 4
            if t <= e <= (13 * t - 1) // 4:
                return (t, s)
    return None


# ---------------------------------------------------------------------------
# Checksum
# ---------------------------------------------------------------------------


def _canonical_payload() -> dict:
    def keyed(table: Mapping[int, tuple[int | None, int, str]]) -> list:
        return [[m, list(row)] for m, row in sorted(table.items())]

    return {
        "small_mixed_pdfs": [[h, [list(b) for b in blocks]] for h, blocks in sorted(SMALL_MIXED_PDFS.items())],
        "small_range_h": list(SMALL_RANGE_H),
        "sipdm19_compact": [list(col) for col in SIPDM19_COMPACT],
        "table_prime": keyed(TABLE_PRIME),
        "table_3p": keyed(TABLE_3P),
        "table_9p": keyed(TABLE_9P),
        "table_11p": keyed(TABLE_11P),
        "gadget_families": [list(p) for p in GADGET_FAMILIES],
        "gadget_2_1": [list(e) for e in GADGET_2_1],
        "s5_psds_t": list(S5_PSDS_T),
        "s5_triple_pairs": [list(p) for p in S5_TRIPLE_PAIRS],
        "nonexistent_pdm3": list(NONEXISTENT_PDM3),
        "exceptions_prime": list(EXCEPTIONS_PRIME),
        "exceptions_3p": list(EXCEPTIONS_3P),
        "exceptions_9p": list(EXCEPTIONS_9P),
        "exceptions_extra": list(EXCEPTIONS_EXTRA),
        "open_pdm3": list(OPEN_PDM3),
        "base_pdm_orders": list(BASE_PDM_ORDERS),
        "sipdm_from_pdf": list(SIPDM_FROM_PDF),
        "sipdm_paper_data": list(SIPDM_PAPER_DATA),
        "sipdm_imported": list(SIPDM_IMPORTED),
        "sipdm_nonexistent": list(SIPDM_NONEXISTENT),
        "sipdm_unknown": list(SIPDM_UNKNOWN),
        "y_even": list(Y_EVEN),
        "y_odd": list(Y_ODD),
        "middle_h_extra": list(MIDDLE_H_EXTRA),
    }


def tables_as_json() -> str:
    """Canonical JSON dump of every embedded table, for export and audit."""
    return json.dumps(_canonical_payload(), sort_keys=True, separators=(",", ":"))


def compute_checksum() -> str:
    return hashlib.sha256(tables_as_json().encode("ascii")).hexdigest()


TABLES_CHECKSUM = "59bc84289ae7848ac4a671a3f03c9c541b8661a92c14445cdf1746bd445db3c7"


def audit_tables() -> bool:
    """True iff the embedded data matches the recorded checksum."""
    return compute_checksum() == TABLES_CHECKSUM


@dataclass(frozen=True)
class RecipeTable:
    """Read-only bundle of all embedded table data."""

    small_mixed_pdfs: Mapping[int, tuple[tuple[int, ...], ...]]
    sipdm19_compact: tuple[tuple[int, int, int], ...]
    tables: Mapping[int, tuple[int | None, int, str]]
    gadget_families: tuple[tuple[int, int], ...]
    s5_psds_t: tuple[int, ...]
    s5_triple_pairs: tuple[tuple[int, int], ...]
    open_pdm3: tuple[int, ...]
    base_pdm_orders: tuple[int, ...]
    checksum: str


def recipe_table() -> RecipeTable:
    return RecipeTable(
        small_mixed_pdfs=dict(SMALL_MIXED_PDFS),
        sipdm19_compact=SIPDM19_COMPACT,
        tables=all_table_rows(),
        gadget_families=GADGET_FAMILIES,
        s5_psds_t=S5_PSDS_T,
        s5_triple_pairs=S5_TRIPLE_PAIRS,
        open_pdm3=OPEN_PDM3,
        base_pdm_orders=BASE_PDM_ORDERS,
        checksum=TABLES_CHECKSUM,
    )
