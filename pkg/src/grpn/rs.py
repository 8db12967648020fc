"""Generalized Robinson-Schensted correspondence for colored permutations.

For an element w of G(r,1,n) the values with color k are Schensted-inserted
in position order to build the component P_k, while Q_k records, in the box
created by the entry at position i, the absolute position i itself.  The
admissible operators L_i / R_i and the ascending canonical representative
of each equivalence class live here as well.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import (
    DuplicateLabel,
    IndexOutOfRange,
    InvalidTableau,
    NotAdmissible,
    ShapeMismatch,
)
from .group import GroupElement, GroupParams, generator
from .tableaux import Multitableau, StandardTableau


@dataclass(frozen=True)
class RSPair:
    """Insertion and recording multitableaux of equal shape."""

    P: Multitableau
    Q: Multitableau

    def __post_init__(self):
        if self.P.shape != self.Q.shape:
            raise ShapeMismatch(f"{self.P.shape} != {self.Q.shape}")


def row_insert(tableau: StandardTableau, x: int) -> tuple[StandardTableau, tuple[int, int]]:
    """Schensted row insertion; returns the new tableau and the 1-based
    (row, column) of the appended box."""
    if x in tableau.labels():
        raise DuplicateLabel(f"label {x} already present")
    rows = [list(row) for row in tableau.rows]
    cur = x
    for t, row in enumerate(rows):
        pos = bisect_right(row, cur)
        if pos == len(row):
            row.append(cur)
            return StandardTableau(tuple(map(tuple, rows))), (t + 1, len(row))
        cur, row[pos] = row[pos], cur
    rows.append([cur])
    return StandardTableau(tuple(map(tuple, rows))), (len(rows), 1)


def rs_map(w: GroupElement) -> RSPair:
    r = w.params.r
    p_rows: list[list[list[int]]] = [[] for _ in range(r)]
    q_rows: list[list[list[int]]] = [[] for _ in range(r)]
    for i, (value, k) in enumerate(zip(w.perm, w.colors), start=1):
        rows = p_rows[k]
        cur = value
        placed = None
        for t, row in enumerate(rows):
            pos = bisect_right(row, cur)
            if pos == len(row):
                row.append(cur)
                placed = t
                break
            cur, row[pos] = row[pos], cur
        if placed is None:
            rows.append([cur])
            placed = len(rows) - 1
        if placed == len(q_rows[k]):
            q_rows[k].append([])
        q_rows[k][placed].append(i)
    P = Multitableau(tuple(StandardTableau(tuple(map(tuple, rs))) for rs in p_rows))
    Q = Multitableau(tuple(StandardTableau(tuple(map(tuple, rs))) for rs in q_rows))
    return RSPair(P, Q)


def rs_inverse(pair: RSPair, params: GroupParams) -> GroupElement:
    """Reverse bumping, component by component in decreasing recording label."""
    n = pair.P.size
    if n != params.n or len(pair.P.components) != params.r:
        raise ShapeMismatch(
            f"pair has rank {n} with {len(pair.P.components)} components, expected {params}"
        )
    perm = [0] * n
    colors = [0] * n
    for k, (p_comp, q_comp) in enumerate(zip(pair.P.components, pair.Q.components)):
        rows = [list(row) for row in p_comp.rows]
        boxes = sorted(
            ((label, t) for t, row in enumerate(q_comp.rows) for label in row),
            reverse=True,
        )
        for label, t in boxes:
            x = rows[t].pop()
            if not rows[t]:
                rows.pop()
            for upper in range(t - 1, -1, -1):
                pos = bisect_right(rows[upper], x) - 1
                if pos < 0:
                    raise InvalidTableau("reverse bump fell off the tableau")
                x, rows[upper][pos] = rows[upper][pos], x
            position = label - 1
            perm[position] = x
            colors[position] = k
        if rows:
            raise InvalidTableau("recording tableau does not exhaust the shape")
    return GroupElement(params, tuple(perm), tuple(colors))


def is_ascending_element(w: GroupElement) -> bool:
    """Colors weakly increase along positions and the values of each color
    class sit entirely below those of every later nonempty class."""
    if any(a > b for a, b in zip(w.colors, w.colors[1:])):
        return False
    classes = [[] for _ in range(w.params.r)]
    for value, k in zip(w.perm, w.colors):
        classes[k].append(value)
    nonempty = [c for c in classes if c]
    return all(max(a) < min(b) for a, b in zip(nonempty, nonempty[1:]))


def left_admissible(w: GroupElement, i: int) -> GroupElement:
    """s_i * w: swaps the values i and i+1, keeping each position's color.
    Admissible only when the positions holding i and i+1 carry different
    colors."""
    n = w.params.n
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"i={i} not in [1, {n - 1}]")
    pos_i = w.perm.index(i)
    pos_j = w.perm.index(i + 1)
    if w.colors[pos_i] == w.colors[pos_j]:
        raise NotAdmissible(f"values {i} and {i + 1} carry equal colors")
    return generator(w.params, i) * w


def right_admissible(w: GroupElement, i: int) -> GroupElement:
    """w * s_i: swaps positions i and i+1 together with their colors.
    Admissible only when those positions carry different colors."""
    n = w.params.n
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"i={i} not in [1, {n - 1}]")
    if w.colors[i - 1] == w.colors[i]:
        raise NotAdmissible(f"positions {i} and {i + 1} carry equal colors")
    return w * generator(w.params, i)


def ascending_moves(w: GroupElement) -> list[tuple[str, int]]:
    """A sequence of admissible moves ("L"|"R", i) taking w to its canonical
    ascending representative.

    Right moves stably bubble positions into weakly increasing color order;
    left moves then stably renumber values so each color class occupies a
    contiguous block, preserving within-class order on both sides.
    """
    moves: list[tuple[str, int]] = []
    cur = w
    changed = True
    while changed:
        changed = False
        for j in range(1, cur.params.n):
            if cur.colors[j - 1] > cur.colors[j]:
                cur = right_admissible(cur, j)
                moves.append(("R", j))
                changed = True
    color_of_value = {v: k for v, k in zip(cur.perm, cur.colors)}
    changed = True
    while changed:
        changed = False
        for v in range(1, cur.params.n):
            if color_of_value[v] > color_of_value[v + 1]:
                cur = left_admissible(cur, v)
                moves.append(("L", v))
                color_of_value[v], color_of_value[v + 1] = (
                    color_of_value[v + 1],
                    color_of_value[v],
                )
                changed = True
    return moves


def apply_moves(w: GroupElement, moves: list[tuple[str, int]]) -> GroupElement:
    cur = w
    for side, i in moves:
        cur = left_admissible(cur, i) if side == "L" else right_admissible(cur, i)
    return cur


def ascending_representative(w: GroupElement) -> GroupElement:
    return apply_moves(w, ascending_moves(w))
