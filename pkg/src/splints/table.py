"""Reference table of expected splint classes, embedded as versioned data.

One entry per published table row: target, row type, the display labels used
there (which keep the D_2/D_3 shorthand for orthogonal pairs of equal-length
roots, so they are presentation text, not canonical stem names), and a witness
partition as explicit coordinate vectors.  Row identity during verification is
established through the witness partitions and Weyl classes, never by
comparing label strings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import Vector

TABLE_VERSION = "1.0"

#: Targets the verification suite covers by default, in report order.
DESK_TARGETS: tuple[tuple[str, int], ...] = (
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("A", 5),
    ("A", 6),
    ("B", 2),
    ("B", 3),
    ("B", 4),
    ("B", 5),
    ("C", 3),
    ("C", 4),
    ("C", 5),
    ("D", 4),
    ("D", 5),
    ("G", 2),
    ("F", 4),
)


@dataclass(frozen=True)
class ExpectedRow:
    family: str
    rank: int
    row_type: str  # "i" through "vi"
    label1: str
    label2: str
    part1: tuple[Vector, ...]
    part2: tuple[Vector, ...]


def _e(i: int, dim: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(dim))


def _a_diff(i: int, j: int, dim: int) -> Vector:
    return tuple((1 if k == i else 0) - (1 if k == j else 0) for k in range(dim))


def _pm(i: int, j: int, sign: int, dim: int) -> Vector:
    return tuple((1 if k == i else 0) + (sign if k == j else 0) for k in range(dim))


def _double(i: int, dim: int) -> Vector:
    return tuple(2 if k == i else 0 for k in range(dim))


def _a_rows(r: int) -> list[ExpectedRow]:
    d = r + 1
    rows = []
    # (A_{r-1}, rA_1): split off every root ending at the last index
    tail = tuple(_a_diff(i, r, d) for i in range(r))
    head = tuple(_a_diff(i, j, d) for i in range(r) for j in range(i + 1, r))
    rows.append(ExpectedRow("A", r, "iii", f"A{r - 1}" if r > 2 else "A1", f"{r}A1", head, tail))
    if r >= 3:
        # shift the lowest tail root across: (A_1+A_{r-1}, (r-1)A_1)
        rows.append(
            ExpectedRow(
                "A",
                r,
                "v",
                f"{r - 1}A1",
                f"A1+A{r - 1}",
                tuple(_a_diff(i, r, d) for i in range(1, r)),
                head + (_a_diff(0, r, d),),
            )
        )
    if r == 3:
        rows.append(
            ExpectedRow(
                "A",
                3,
                "iv",
                "A1+D2",
                "A1+D2",
                (_a_diff(0, 1, 4), _a_diff(1, 2, 4), _a_diff(0, 3, 4)),
                (_a_diff(2, 3, 4), _a_diff(0, 2, 4), _a_diff(1, 3, 4)),
            )
        )
    if r == 4:
        rows.append(
            ExpectedRow(
                "A",
                4,
                "iv",
                "A2+D2",
                "A2+D2",
                (_a_diff(2, 3, 5), _a_diff(3, 4, 5), _a_diff(2, 4, 5), _a_diff(0, 3, 5), _a_diff(1, 4, 5)),
                (_a_diff(0, 1, 5), _a_diff(1, 2, 5), _a_diff(0, 2, 5), _a_diff(1, 3, 5), _a_diff(0, 4, 5)),
            )
        )
        rows.append(
            ExpectedRow(
                "A",
                4,
                "v",
                "2A2",
                "2D2",
                (_a_diff(0, 1, 5), _a_diff(1, 2, 5), _a_diff(0, 2, 5), _a_diff(2, 3, 5), _a_diff(3, 4, 5), _a_diff(2, 4, 5)),
                (_a_diff(1, 3, 5), _a_diff(0, 3, 5), _a_diff(1, 4, 5), _a_diff(0, 4, 5)),
            )
        )
    return rows


def _b_rows(r: int) -> list[ExpectedRow]:
    longs = tuple(v for i in range(r) for j in range(i + 1, r) for v in (_pm(i, j, -1, r), _pm(i, j, 1, r)))
    shorts = tuple(_e(i, r) for i in range(r))
    rows = [ExpectedRow("B", r, "ii", f"D{r}", f"{r}A1", longs, shorts)]
    if r == 2:
        rows.append(
            ExpectedRow("B", 2, "iii", "A1", "A2", (_pm(0, 1, -1, 2),), (_e(0, 2), _e(1, 2), _pm(0, 1, 1, 2)))
        )
        rows.append(
            ExpectedRow("B", 2, "iv", "2A1", "2A1", (_e(0, 2), _pm(0, 1, -1, 2)), (_e(1, 2), _pm(0, 1, 1, 2)))
        )
    if r == 3:
        rows.append(
            ExpectedRow(
                "B",
                3,
                "vi",
                "3A1",
                "A3",
                (_pm(0, 1, 1, 3), _pm(0, 2, 1, 3), _pm(1, 2, 1, 3)),
                (_pm(0, 1, -1, 3), _pm(0, 2, -1, 3), _pm(1, 2, -1, 3), _e(0, 3), _e(1, 3), _e(2, 3)),
            )
        )
    return rows


def _c_rows(r: int) -> list[ExpectedRow]:
    longs = tuple(_double(i, r) for i in range(r))
    shorts = tuple(v for i in range(r) for j in range(i + 1, r) for v in (_pm(i, j, -1, r), _pm(i, j, 1, r)))
    rows = [ExpectedRow("C", r, "ii", f"{r}A1", f"D{r}", longs, shorts)]
    if r == 3:
        rows.append(
            ExpectedRow(
                "C",
                3,
                "vi",
                "A1+B2",
                "A1+A2",
                (_pm(1, 2, -1, 3), _double(0, 3), _double(1, 3), _pm(0, 1, -1, 3), _pm(0, 1, 1, 3)),
                (_pm(1, 2, 1, 3), _double(2, 3), _pm(0, 2, -1, 3), _pm(0, 2, 1, 3)),
            )
        )
    return rows


def _d_rows(r: int) -> list[ExpectedRow]:
    if r != 4:
        return []
    return [
        ExpectedRow(
            "D",
            4,
            "iv",
            "2A2",
            "2A2",
            (
                _pm(0, 1, -1, 4),
                _pm(1, 3, -1, 4),
                _pm(0, 3, -1, 4),
                _pm(2, 3, 1, 4),
                _pm(0, 2, -1, 4),
                _pm(0, 3, 1, 4),
            ),
            (
                _pm(2, 3, -1, 4),
                _pm(1, 3, 1, 4),
                _pm(1, 2, 1, 4),
                _pm(1, 2, -1, 4),
                _pm(0, 2, 1, 4),
                _pm(0, 1, 1, 4),
            ),
        )
    ]


_G2_LONG = ((2, -1, -1), (1, -2, 1), (1, 1, -2))
_G2_SHORT = ((1, -1, 0), (1, 0, -1), (0, 1, -1))


def _g_rows() -> list[ExpectedRow]:
    return [
        ExpectedRow("G", 2, "i", "A2", "A2", _G2_LONG, _G2_SHORT),
        ExpectedRow(
            "G",
            2,
            "vi",
            "2A1",
            "B2",
            ((1, -2, 1), (1, 1, -2)),
            ((2, -1, -1),) + _G2_SHORT,
        ),
    ]


def _f_rows() -> list[ExpectedRow]:
    longs = tuple(_double(i, 4) for i in range(4)) + tuple(
        (1, s2, s3, s4) for s2 in (-1, 1) for s3 in (-1, 1) for s4 in (-1, 1)
    )
    shorts = tuple(v for i in range(4) for j in range(i + 1, 4) for v in (_pm(i, j, -1, 4), _pm(i, j, 1, 4)))
    return [ExpectedRow("F", 4, "i", "D4", "D4", longs, shorts)]


def rows_for(family: str, rank: int) -> tuple[ExpectedRow, ...]:
    """Expected splint classes of the given simple system, one row per class."""
    if family == "A" and rank >= 2:
        return tuple(_a_rows(rank))
    if family == "B" and rank >= 2:
        return tuple(_b_rows(rank))
    if family == "C" and rank >= 3:
        return tuple(_c_rows(rank))
    if family == "D" and rank >= 4:
        return tuple(_d_rows(rank))
    if family == "G" and rank == 2:
        return tuple(_g_rows())
    if family == "F" and rank == 4:
        return tuple(_f_rows())
    return ()
