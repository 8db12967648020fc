"""Tableaux-side sign formula and exhaustive verification sweeps.

The tableaux route evaluates a colored permutation's sign character from
its Robinson-Schensted image alone:

    (-1)^{e(P)} * (z^i)^{spin(P)+spin(Q)} * sign(P) * sign(Q)

The group route (``GroupElement.one_dim``) evaluates it from the inversion
count and color sum.  The sweeps check the two routes against each other
over entire groups.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ._kernels import BACKEND, get_kernel
from .errors import IndexOutOfRange, NotAscending, ShapeMismatch
from .group import DEFAULT_CAP, GroupElement, GroupParams, OneDimValue, enumerate_group
from .rs import (
    RSPair,
    ascending_representative,
    is_ascending_element,
    left_admissible,
    right_admissible,
    rs_inverse,
    rs_map,
)
from .tableaux import Multitableau, multipartitions, standard_multitableaux


def pi_from_tableaux(P: Multitableau, Q: Multitableau, i: int, r: int) -> OneDimValue:
    if P.shape != Q.shape:
        raise ShapeMismatch(f"{P.shape} != {Q.shape}")
    if not 0 <= i < r:
        raise IndexOutOfRange(f"i={i} not in [0, {r})")
    sign = (-1) ** (P.even_row_boxes() + P.inversions() + Q.inversions())
    spin_sum = (P.twice_spin() + Q.twice_spin()) // 2
    return OneDimValue(sign, (i * spin_sum) % r, r)


def pi(w: GroupElement, i: int) -> OneDimValue:
    pair = rs_map(w)
    return pi_from_tableaux(pair.P, pair.Q, i, w.params.r)


@dataclass
class VerificationReport:
    params: GroupParams
    kind: str
    elements_checked: int = 0
    i_values_checked: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "params": {"r": self.params.r, "p": self.params.p, "n": self.params.n},
            "kind": self.kind,
            "checked": self.elements_checked,
            "i_values_checked": self.i_values_checked,
            "failures": [
                {
                    "element": str(w),
                    "i": i,
                    "expected": expected.to_json() if isinstance(expected, OneDimValue) else expected,
                    "got": got.to_json() if isinstance(got, OneDimValue) else got,
                }
                for w, i, expected, got in self.counterexamples
            ],
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def summary(self) -> str:
        verdict = "PASS" if self.passed else f"FAIL ({len(self.counterexamples)} counterexamples)"
        return (
            f"verify {self.kind} G({self.params.r},{self.params.p},{self.params.n}): "
            f"{verdict}, {self.elements_checked} elements, "
            f"{self.i_values_checked} value checks, {self.elapsed * 1000:.1f} ms"
        )


def verify_theorem(
    params: GroupParams,
    cap: int = DEFAULT_CAP,
    max_counterexamples: int = 10,
    backend: str | None = None,
) -> VerificationReport:
    """Check the sign formula for every element of G(r,p,n) and every i."""
    kernel = get_kernel(backend)
    r = params.r
    report = VerificationReport(params, "theorem")
    start = time.perf_counter()
    for w in enumerate_group(params, cap=cap):
        inv_sigma, color_sum, e_p, inv_p, inv_q, ts_p, ts_q = kernel(w.perm, w.colors, r)
        group_sign = (-1) ** inv_sigma
        tab_sign = (-1) ** (e_p + inv_p + inv_q)
        spin_sum = (ts_p + ts_q) // 2
        report.elements_checked += 1
        for i in range(r):
            expected = OneDimValue(group_sign, (i * color_sum) % r, r)
            got = OneDimValue(tab_sign, (i * spin_sum) % r, r)
            report.i_values_checked += 1
            if expected != got and len(report.counterexamples) < max_counterexamples:
                report.counterexamples.append((w, i, expected, got))
    report.elapsed = time.perf_counter() - start
    return report


def verify_membership(
    params: GroupParams, cap: int = DEFAULT_CAP, max_counterexamples: int = 10
) -> VerificationReport:
    """Subgroup membership matches the spin criterion, both directions.

    Forward: over all of G(r,1,n), membership in G(r,p,n) is equivalent to
    p dividing twice the spin of P.  Backward: every same-shape pair whose
    shape has p-divisible twice-spin reconstructs to a subgroup member.
    """
    r, p, n = params.r, params.p, params.n
    full = GroupParams(r, 1, n)
    report = VerificationReport(params, "membership")
    start = time.perf_counter()
    for w in enumerate_group(full, cap=cap):
        member = w.is_member(p)
        ts = rs_map(w).P.twice_spin()
        report.elements_checked += 1
        report.i_values_checked += 1
        if member != (ts % p == 0) and len(report.counterexamples) < max_counterexamples:
            report.counterexamples.append((w, 0, member, ts % p == 0))
    for shape in multipartitions(n, r):
        ts = sum(k * sum(lam) for k, lam in enumerate(shape))
        if ts % p != 0:
            continue
        tableaux = list(standard_multitableaux(shape, cap=n))
        for P in tableaux:
            for Q in tableaux:
                w = rs_inverse(RSPair(P, Q), full)
                report.i_values_checked += 1
                if not w.is_member(p) and len(report.counterexamples) < max_counterexamples:
                    report.counterexamples.append((w, 0, True, False))
    report.elapsed = time.perf_counter() - start
    return report


def verify_admissible(
    params: GroupParams, cap: int = DEFAULT_CAP, max_counterexamples: int = 10
) -> VerificationReport:
    """Check the admissible-operator propositions over all of G(r,1,n).

    For every admissible right move: P is fixed, the multitableau inversion
    count of Q changes by exactly one, and each component's count is fixed.
    Symmetrically for left moves and P.  Also checks that the formula-vs-
    character agreement boolean is constant along the passage to the
    ascending representative.
    """
    r, n = params.r, params.n
    full = GroupParams(r, 1, n)
    report = VerificationReport(params, "admissible")
    start = time.perf_counter()

    def record(w, i, expected, got):
        if len(report.counterexamples) < max_counterexamples:
            report.counterexamples.append((w, i, expected, got))

    for w in enumerate_group(full, cap=cap):
        pair = rs_map(w)
        report.elements_checked += 1
        for i in range(1, n):
            if w.colors[i - 1] != w.colors[i]:
                moved = rs_map(right_admissible(w, i))
                report.i_values_checked += 1
                ok = (
                    moved.P == pair.P
                    and abs(moved.Q.inversions() - pair.Q.inversions()) == 1
                    and all(
                        a.inversions() == b.inversions()
                        for a, b in zip(moved.Q.components, pair.Q.components)
                    )
                )
                if not ok:
                    record(w, i, "R-move invariants", "violated")
            pos_i, pos_j = w.perm.index(i), w.perm.index(i + 1)
            if w.colors[pos_i] != w.colors[pos_j]:
                moved = rs_map(left_admissible(w, i))
                report.i_values_checked += 1
                ok = (
                    moved.Q == pair.Q
                    and abs(moved.P.inversions() - pair.P.inversions()) == 1
                    and all(
                        a.inversions() == b.inversions()
                        for a, b in zip(moved.P.components, pair.P.components)
                    )
                )
                if not ok:
                    record(w, i, "L-move invariants", "violated")
        rep = ascending_representative(w)
        if not is_ascending_element(rep):
            record(w, 0, "ascending representative", "not ascending")
        for i in range(r):
            report.i_values_checked += 1
            agrees_w = pi(w, i) == w.one_dim(i, 1)
            agrees_rep = pi(rep, i) == rep.one_dim(i, 1)
            if agrees_w != agrees_rep:
                record(w, i, agrees_w, agrees_rep)
    report.elapsed = time.perf_counter() - start
    return report


def decompose_ascending(w: GroupElement) -> list[GroupElement]:
    """Factor an ascending element as u_0 * ... * u_{r-1} * u_r.

    For k < r, u_k is the permutation of the k-th value block with zero
    colors; u_r is the identity permutation carrying w's colors.  The
    factors multiply back to w.
    """
    if not is_ascending_element(w):
        raise NotAscending(str(w))
    params, n, r = w.params, w.params.n, w.params.r
    factors = []
    for k in range(r):
        perm = list(range(1, n + 1))
        for pos, (value, color) in enumerate(zip(w.perm, w.colors), start=1):
            if color == k:
                perm[pos - 1] = value
        factors.append(GroupElement(params, tuple(perm), (0,) * n))
    factors.append(GroupElement(params, tuple(range(1, n + 1)), w.colors))
    return factors
