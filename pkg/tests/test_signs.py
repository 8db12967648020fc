import json

import pytest

from grpn.errors import IndexOutOfRange, NotAscending, ShapeMismatch
from grpn.group import (
    GroupParams,
    OneDimValue,
    enumerate_group,
    generator,
    identity,
    parse_element,
)
from grpn.rs import ascending_representative, rs_map
from grpn.signs import (
    VerificationReport,
    decompose_ascending,
    pi,
    pi_from_tableaux,
    verify_admissible,
    verify_membership,
    verify_theorem,
)
from grpn.tableaux import Multitableau


class TestPiFromTableaux:
    def test_running_example_pair(self):
        P = Multitableau.from_json([[[1, 2, 8], [6]], [[4], [5]], [[3, 7]], []])
        Q = Multitableau.from_json([[[2, 4, 8], [7]], [[1], [6]], [[3, 5]], []])
        for i in range(4):
            assert pi_from_tableaux(P, Q, i, 4) == OneDimValue(1, (2 * i) % 4, 4)

    def test_ascending_example_pair(self):
        T = Multitableau.from_json([[[1, 2, 4], [3]], [[5], [6]], [[7, 8]], []])
        for i in range(4):
            assert pi_from_tableaux(T, T, i, 4) == OneDimValue(1, (2 * i) % 4, 4)

    def test_empty(self):
        empty = Multitableau.from_json([[], []])
        assert pi_from_tableaux(empty, empty, 1, 2) == OneDimValue(1, 0, 2)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            pi_from_tableaux(
                Multitableau.from_json([[[1, 2]]]),
                Multitableau.from_json([[[1], [2]]]),
                0,
                1,
            )

    def test_index_range(self):
        T = Multitableau.from_json([[[1]]])
        with pytest.raises(IndexOutOfRange):
            pi_from_tableaux(T, T, 1, 1)


class TestPi:
    def test_running_example(self, running_example):
        for i in range(4):
            assert pi(running_example, i) == running_example.one_dim(i, 1)
            assert pi(running_example, i) == OneDimValue(1, (2 * i) % 4, 4)

    def test_identity(self):
        e = identity(GroupParams(5, 1, 4))
        for i in range(5):
            assert pi(e, i) == OneDimValue(1, 0, 5)

    def test_single_color_box(self):
        s0 = generator(GroupParams(4, 1, 1), 0)
        pair = rs_map(s0)
        assert pair.P.to_json() == [[], [[1]], [], []]
        for i in range(4):
            assert pi(s0, i) == OneDimValue(1, i, 4) == s0.one_dim(i, 1)

    def test_exponent_is_color_sum(self):
        # twice the spin of P equals the color sum
        for w in enumerate_group(GroupParams(4, 1, 3)):
            assert rs_map(w).P.twice_spin() == w.color_sum()
            for i in range(4):
                assert pi(w, i).exponent == (i * w.color_sum()) % 4


class TestVerifyTheorem:
    @pytest.mark.parametrize("r,p,n", [(1, 1, 4), (2, 1, 3), (2, 2, 3), (4, 1, 3)])
    def test_passes(self, r, p, n):
        report = verify_theorem(GroupParams(r, p, n))
        assert report.passed
        assert report.elements_checked == GroupParams(r, p, n).order
        assert report.i_values_checked == report.elements_checked * r

    def test_subgroup_consistent_with_full_group(self):
        full = verify_theorem(GroupParams(4, 1, 3))
        sub = verify_theorem(GroupParams(4, 2, 3))
        assert full.passed and sub.passed
        assert sub.elements_checked * 2 == full.elements_checked

    def test_report_serialization(self):
        report = verify_theorem(GroupParams(2, 1, 2))
        data = report.to_json()
        assert data["failures"] == []
        assert data["checked"] == 8
        json.dumps(data)  # serializable

    def test_counterexamples_recorded(self, running_example):
        # fabricate a failing comparison through the report structure
        report = VerificationReport(GroupParams(4, 1, 8), "theorem")
        report.counterexamples.append(
            (running_example, 1, OneDimValue(1, 2, 4), OneDimValue(-1, 2, 4))
        )
        assert not report.passed
        blob = report.to_json()["failures"][0]
        assert blob["element"].startswith("[z1*5")
        assert blob["expected"] == {"sign": 1, "exponent": 2}


class TestVerifyMembership:
    @pytest.mark.parametrize("r,p,n", [(2, 2, 3), (4, 4, 2), (3, 1, 3)])
    def test_passes(self, r, p, n):
        assert verify_membership(GroupParams(r, p, n)).passed


class TestVerifyAdmissible:
    @pytest.mark.parametrize("r,p,n", [(2, 1, 3), (3, 1, 3)])
    def test_passes(self, r, p, n):
        report = verify_admissible(GroupParams(r, p, n))
        assert report.passed
        assert report.elements_checked == GroupParams(r, 1, n).order


class TestDecomposeAscending:
    def test_worked_example(self, running_example):
        rep = ascending_representative(running_example)
        factors = decompose_ascending(rep)
        assert len(factors) == 5
        u0, u1, u2, u3, u4 = factors
        assert u0 == parse_element("[1,3,2,4,5,6,7,8]", 4)
        assert u1 == parse_element("[1,2,3,4,6,5,7,8]", 4)
        assert u2.is_identity() and u3.is_identity()
        assert u4 == parse_element("[1,2,3,4,z1*5,z1*6,z2*7,z2*8]", 4)
        product = u0
        for u in factors[1:]:
            product = product * u
        assert product == rep

    def test_identity(self):
        e = identity(GroupParams(3, 1, 2))
        assert all(u.is_identity() for u in decompose_ascending(e))

    def test_requires_ascending(self, running_example):
        with pytest.raises(NotAscending):
            decompose_ascending(running_example)

    def test_product_recovers_all_ascending(self):
        params = GroupParams(2, 1, 3)
        from grpn.rs import is_ascending_element

        for w in enumerate_group(params):
            if not is_ascending_element(w):
                continue
            factors = decompose_ascending(w)
            product = factors[0]
            for u in factors[1:]:
                product = product * u
            assert product == w
            # permutation factors commute pairwise
            for a in factors[:-1]:
                for b in factors[:-1]:
                    assert a * b == b * a

    def test_color_factor_character(self):
        w = parse_element("[1,3,2,4,z1*6,z1*5,z2*7,z2*8]", 4)
        u_last = decompose_ascending(w)[-1]
        for i in range(4):
            assert u_last.one_dim(i, 1) == OneDimValue(1, (2 * i) % 4, 4)
