import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import siegel_runge as sr
from siegel_runge.runge import DivisorIncidence

from oracles import negation_orbit_divisor_count


def incidence(r, subsets):
    return DivisorIncidence.from_subsets(r, subsets)


class TestIncidenceValues:
    def test_three_lines_general_position(self):
        # all pairs meet, no triple point
        inc = incidence(3, [{1, 2}, {1, 3}, {2, 3}])
        assert sr.m_value(inc) == 2

    def test_pairwise_disjoint(self):
        inc = incidence(4, [{1}, {2}, {3}, {4}])
        assert sr.m_value(inc) == 1

    def test_common_point(self):
        inc = incidence(4, [{1, 2, 3, 4}])
        assert sr.m_value(inc) == 4

    def test_lines_with_all_crossings_excluded(self):
        # Y swallows the three pairwise intersection points
        inc = incidence(3, [{1}, {2}, {3}])
        assert sr.m_y_value(inc) == 1

    def test_lines_with_one_crossing_excluded(self):
        inc = incidence(3, [{1, 2}, {1, 3}])
        assert sr.m_y_value(inc) == 2

    def test_shrinking_family_shrinks_m(self):
        full = incidence(3, [{1, 2}, {1, 3}, {2, 3}])
        cut = incidence(3, [{1}, {2}, {3}])
        assert sr.m_y_value(cut) <= sr.m_value(full)


class TestIncidenceNormalization:
    def test_antichain(self):
        inc = incidence(3, [{1}, {1, 2}, {2}, {3}, {1, 2}])
        assert inc.outside_y == (frozenset({3}), frozenset({1, 2}))

    def test_order_independent(self):
        a = incidence(4, [{1, 2}, {3}, {4}, {2, 1}])
        b = incidence(4, [{4}, {1, 2}, {3}])
        assert a == b

    @given(
        st.integers(min_value=1, max_value=6).flatmap(
            lambda r: st.tuples(
                st.just(r),
                st.lists(
                    st.sets(st.integers(min_value=1, max_value=r), min_size=1, max_size=r),
                    max_size=8,
                ),
            )
        )
    )
    @settings(max_examples=200, deadline=None)
    def test_normalization_idempotent_and_order_free(self, data):
        r, subsets = data
        family = subsets + [{i} for i in range(1, r + 1)]  # force coverage
        inc1 = incidence(r, family)
        inc2 = incidence(r, list(reversed(family)))
        again = incidence(r, [set(s) for s in inc1.outside_y])
        assert inc1 == inc2 == again

    def test_covered_divisor_required(self):
        with pytest.raises(sr.InvalidInputError):
            incidence(3, [{1, 2}])

    def test_index_bounds(self):
        with pytest.raises(sr.InvalidInputError):
            incidence(2, [{1}, {2}, {3}])

    def test_empty_family_rejected(self):
        with pytest.raises(sr.InvalidInputError):
            incidence(1, [])

    def test_zero_divisors_rejected(self):
        with pytest.raises(sr.InvalidInputError):
            incidence(0, [])


class TestCondition:
    def test_examples(self):
        assert sr.runge_condition(1, 9, 10).holds
        assert not sr.runge_condition(1, 10, 10).holds
        assert sr.runge_condition(13, 9, 130).holds
        assert not sr.runge_condition(13, 10, 130).holds

    def test_validation(self):
        with pytest.raises(sr.InvalidInputError):
            sr.runge_condition(0, 1, 1)

    @given(
        st.integers(min_value=2, max_value=50),
        st.integers(min_value=2, max_value=50),
        st.integers(min_value=1, max_value=2500),
    )
    @settings(max_examples=300, deadline=None)
    def test_monotonicity(self, m, s, r):
        if sr.runge_condition(m, s, r).holds:
            assert sr.runge_condition(m, s - 1, r).holds
            assert sr.runge_condition(m - 1, s, r).holds

    def test_verdict_json(self):
        assert sr.runge_condition(1, 9, 10).to_json() == {
            "holds": True, "m": 1, "s": 9, "r": 10,
        }


class TestSiegelSpecialization:
    @pytest.mark.parametrize("n,count", [(2, 10), (4, 130), (6, 650)])
    def test_divisor_count_formula(self, n, count):
        assert sr.siegel_divisor_count(n) == count

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
    def test_divisor_count_matches_enumeration(self, n):
        assert sr.siegel_divisor_count(n) == negation_orbit_divisor_count(n)

    @pytest.mark.parametrize("n,value", [(2, 1), (4, 13), (6, 33)])
    def test_m_y_formula(self, n, value):
        assert sr.siegel_m_y(n) == value

    def test_level_validation(self):
        for bad in (1, 3, 0, -2, 22):
            with pytest.raises(sr.InvalidInputError):
                sr.siegel_divisor_count(bad)
            with pytest.raises(sr.InvalidInputError):
                sr.siegel_m_y(bad)

    def test_condition_examples(self):
        assert sr.siegel_runge_condition(2, 9).holds
        assert not sr.siegel_runge_condition(2, 10).holds
        assert sr.siegel_runge_condition(4, 9).holds
        assert not sr.siegel_runge_condition(4, 10).holds

    def test_verdict_carries_formulas(self):
        v = sr.siegel_runge_condition(4, 9)
        assert v.m_used == 13 and v.r == 130


class TestSiegelIncidence:
    def test_witness(self):
        inc = sr.siegel_incidence(2)
        assert inc.r == 10
        assert sr.m_y_value(inc) == 1
        assert sr.runge_condition(sr.m_y_value(inc), 9, inc.r).holds

    def test_matches_closed_formula(self):
        assert sr.m_y_value(sr.siegel_incidence(2)) == sr.siegel_m_y(2)

    def test_other_levels_unsupported(self):
        with pytest.raises(sr.InvalidInputError):
            sr.siegel_incidence(4)
