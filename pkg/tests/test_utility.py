import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kappacalc import (
    INF,
    Leaf,
    PrizeAssessment,
    PrizeSet,
    SimpleLottery,
    UtilityValue,
    UtilityVector,
    add_scalar,
    compare_standard,
    evaluate,
    make_node,
    min_vectors,
    scalar_utility,
    simple_node,
    standard_equivalent,
)
from kappacalc.errors import (
    EmptyList,
    InvalidAssessment,
    NotNormalized,
    UnassessedPrize,
)

from conftest import random_assessment, random_lottery, random_prizes
from oracles import path_sum_evaluate

O3 = PrizeSet(("o1", "o2", "o3"))
A3 = PrizeAssessment.from_map(O3, {"o1": (0, INF), "o2": (0, 3), "o3": (INF, 0)})

# the full scale grid used for the order-isomorphism checks
B0_GRID = [UtilityValue(0, y) for y in [*range(21), INF]] + [
    UtilityValue(x, 0) for x in [*range(1, 21), INF]
]


class TestScale:
    def test_vector_allows_unnormalized_pairs(self):
        v = UtilityVector(3, 5)
        assert v.pair() == (3, 5)

    def test_value_requires_a_zero_component(self):
        with pytest.raises(NotNormalized):
            UtilityValue(3, 5)
        with pytest.raises(NotNormalized):
            UtilityValue(INF, INF)
        with pytest.raises(NotNormalized):
            UtilityVector(1, 2).to_value()

    def test_vector_to_value_checkpoint(self):
        assert UtilityVector(0, 4).to_value() == UtilityValue(0, 4)

    def test_scalar_utility(self):
        assert scalar_utility(UtilityValue(0, INF)) == INF
        assert scalar_utility(UtilityValue(INF, 0)) == -INF
        assert scalar_utility(UtilityValue(0, 0)) == 0
        assert scalar_utility(UtilityValue(4, 0)) == -4
        assert scalar_utility(UtilityValue(0, 7)) == 7


class TestMinPlusOps:
    def test_add_scalar(self):
        assert add_scalar(3, UtilityVector(0, 2)).pair() == (3, 5)
        assert add_scalar(0, UtilityVector(1, 0)).pair() == (1, 0)
        assert add_scalar(2, UtilityVector(0, INF)).pair() == (2, INF)
        assert add_scalar(INF, UtilityVector(0, 1)).pair() == (INF, INF)

    def test_min_vectors(self):
        assert min_vectors([UtilityVector(0, 5), UtilityVector(3, 0)]).pair() == (0, 0)
        assert min_vectors([UtilityVector(2, INF), UtilityVector(INF, 1)]).pair() == (2, 1)
        only = UtilityVector(4, 0)
        assert min_vectors([only]) == only
        with pytest.raises(EmptyList):
            min_vectors([])

    @given(
        st.integers(0, 30),
        st.lists(
            st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=1, max_size=6
        ),
    )
    def test_add_distributes_over_min(self, c, pairs):
        vs = [UtilityVector(a, b) for a, b in pairs]
        left = add_scalar(c, min_vectors(vs))
        right = min_vectors([add_scalar(c, v) for v in vs])
        assert left == right


class TestStandardOrder:
    def test_case_best_side(self):
        assert compare_standard(UtilityValue(0, 5), UtilityValue(0, 3)) == 1

    def test_case_across_zero(self):
        assert compare_standard(UtilityValue(0, 0), UtilityValue(2, 0)) == 1

    def test_case_worst_side(self):
        assert compare_standard(UtilityValue(3, 0), UtilityValue(5, 0)) == 1

    def test_reflexive(self):
        assert compare_standard(UtilityValue(3, 0), UtilityValue(3, 0)) == 0

    def test_agrees_with_scalar_order_on_grid(self):
        # exhaustive: the three-case rule is the order isomorphism
        for u in B0_GRID:
            for v in B0_GRID:
                su, sv = scalar_utility(u), scalar_utility(v)
                expected = (su > sv) - (su < sv)
                assert compare_standard(u, v) == expected, (u, v)


class TestAssessment:
    def test_best_prize_pinned(self):
        with pytest.raises(InvalidAssessment, match="must map to"):
            PrizeAssessment.from_map(
                O3, {"o1": (0, 3), "o2": (0, 1), "o3": (INF, 0)}
            )

    def test_strict_monotonicity(self):
        with pytest.raises(InvalidAssessment, match="strictly decrease"):
            PrizeAssessment.from_map(
                O3, {"o1": (0, INF), "o2": (0, 1), "o3": (0, 1)}
            )

    def test_worst_prize_may_be_finite(self):
        # bottom value (21, 0) is legal: the scale's endpoints need not be hit
        a = PrizeAssessment.from_map(
            O3, {"o1": (0, INF), "o2": (0, 1), "o3": (21, 0)}
        )
        assert scalar_utility(a.value_of("o3")) == -21

    def test_every_prize_needed(self):
        with pytest.raises(UnassessedPrize):
            PrizeAssessment.from_map(O3, {"o1": (0, INF), "o3": (INF, 0)})

    def test_value_lookup(self):
        assert A3.value_of("o2") == UtilityValue(0, 3)


EARTHQUAKE_PAIRS = [
    (0, INF), (0, 7), (0, 2), (0, 0), (2, 0), (3, 0), (4, 0),
    (6, 0), (9, 0), (11, 0), (14, 0), (18, 0), (21, 0),
]
EARTHQUAKE_DELTAS = (4, 3, 2, 1, 0, 1, 2, 2, 3, 4, 5, 6, 7)


def earthquake():
    prizes = PrizeSet(tuple(f"q{i}" for i in range(13)))
    assessment = PrizeAssessment(
        prizes, tuple(UtilityValue(a, b) for a, b in EARTHQUAKE_PAIRS)
    )
    return SimpleLottery(prizes, EARTHQUAKE_DELTAS), assessment


class TestEvaluate:
    def test_earthquake_table(self):
        lottery, assessment = earthquake()
        assert evaluate(lottery, assessment) == UtilityValue(1, 0)

    def test_two_level_tree_with_assessed_middle_prize(self):
        inner1 = simple_node(O3, {"o1": 4, "o2": 0, "o3": 0})
        inner2 = simple_node(O3, {"o1": 0, "o3": 2})
        tree = make_node([(0, inner1), (5, inner2)])
        assert evaluate(tree, A3) == UtilityValue(0, 0)

    def test_leaves_take_assessed_values(self):
        assert evaluate(Leaf("o1", O3), A3) == UtilityValue(0, INF)
        assert evaluate(Leaf("o3", O3), A3) == UtilityValue(INF, 0)

    def test_simple_lottery_input(self):
        sl = SimpleLottery(O3, (0, INF, 5))
        assert evaluate(sl, A3) == UtilityValue(0, 5)

    def test_prize_set_must_match(self):
        other = PrizeSet(("x", "y"))
        sl = SimpleLottery(other, (0, 1))
        with pytest.raises(UnassessedPrize):
            evaluate(sl, A3)

    def test_matches_path_oracle_and_b0_closure(self, rng):
        for _ in range(250):
            prizes = random_prizes(rng)
            assessment = random_assessment(rng, prizes)
            tree = random_lottery(rng, prizes, depth=3, max_branch=4)
            value = evaluate(tree, assessment)
            assert min(value.pair()) == 0
            assert value.pair() == path_sum_evaluate(tree, assessment).pair()

    def test_agrees_with_reduce(self, rng):
        for _ in range(250):
            prizes = random_prizes(rng)
            assessment = random_assessment(rng, prizes)
            tree = random_lottery(rng, prizes, depth=3, max_branch=4)
            assert evaluate(tree, assessment) == evaluate(tree.reduce(), assessment)


class TestStandardEquivalent:
    def test_endpoints(self):
        eq = standard_equivalent(Leaf("o3", O3), A3)
        assert tuple(eq.prizes) == ("o1", "o3")
        assert eq.deltas == (INF, 0)

    def test_earthquake(self):
        lottery, assessment = earthquake()
        eq = standard_equivalent(lottery, assessment)
        assert tuple(eq.prizes) == ("q0", "q12")
        assert eq.deltas == (1, 0)

    def test_value_is_reinterpreted_as_deltas(self):
        inner1 = simple_node(O3, {"o1": 4, "o2": 0, "o3": 0})
        inner2 = simple_node(O3, {"o1": 0, "o3": 2})
        tree = make_node([(0, inner1), (5, inner2)])
        assert standard_equivalent(tree, A3).deltas == (0, 0)


class TestCoarseness:
    @settings(max_examples=40)
    @given(st.integers(0, 10), st.integers(1, 10), st.integers(0, 10))
    def test_small_degree_gaps_vanish(self, kappa, sigma, delta_extra):
        # neighbouring prizes sigma apart: a branch degree of at least sigma
        # makes the coarser prize invisible
        delta = sigma + delta_extra
        prizes = PrizeSet(("top", "oi", "oj", "bottom"))
        assessment = PrizeAssessment.from_map(
            prizes,
            {
                "top": (0, INF),
                "oi": (0, kappa + sigma),
                "oj": (0, kappa),
                "bottom": (INF, 0),
            },
        )
        tree = simple_node(prizes, {"oi": 0, "oj": delta})
        assert evaluate(tree, assessment) == UtilityValue(0, kappa + sigma)

    def test_zero_gap_is_the_same_prize(self):
        # sigma = 0 would need two equally preferred prizes; the calculus
        # models that as two branches to one prize
        tree = make_node([(0, Leaf("o2", O3)), (4, Leaf("o2", O3))])
        assert evaluate(tree, A3) == A3.value_of("o2")
