"""The two-sided qualitative utility scale and min-plus expected utility.

A utility value is a pair (toward_best, toward_worst): the disbelief
degrees of a standard lottery over the best and worst reference prizes
that the holder is indifferent to.  Values live on the scale where
``min(toward_best, toward_worst) == 0``; the pair maps to a single signed
scalar ``toward_worst - toward_best``, which is an order isomorphism onto
the integers with both infinities.

Expected utility of a lottery is the min-plus analogue of the familiar
sum-of-products: branch degrees are *added* to child utilities and the
results are *minimized* componentwise.  Intermediate sums step off the
scale (their minimum can exceed 0), so they are plain vectors; the final
minimum provably lands back on the scale, and the conversion at the end is
the runtime checkpoint for that closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .degrees import Degree, INF, Signed, check_degree
from .errors import (
    EmptyList,
    InvalidAssessment,
    NotNormalized,
    UnassessedPrize,
)
from .lottery import Leaf, Lottery, Node, PrizeSet, SimpleLottery


@dataclass(frozen=True)
class UtilityVector:
    """An unconstrained degree pair; the workspace for intermediate sums."""

    toward_best: Degree
    toward_worst: Degree

    def __post_init__(self):
        check_degree(self.toward_best)
        check_degree(self.toward_worst)

    def pair(self) -> tuple[Degree, Degree]:
        return (self.toward_best, self.toward_worst)

    def to_value(self) -> "UtilityValue":
        """Re-enter the utility scale; raises if the minimum is not 0."""
        return UtilityValue(self.toward_best, self.toward_worst)


@dataclass(frozen=True)
class UtilityValue(UtilityVector):
    """A pair on the scale proper: min(toward_best, toward_worst) == 0."""

    def __post_init__(self):
        super().__post_init__()
        if min(self.toward_best, self.toward_worst) != 0:
            raise NotNormalized(
                f"({self.toward_best}, {self.toward_worst}) is off the utility scale: "
                "one component must be 0"
            )


def scalar_utility(value: UtilityValue) -> Signed:
    """Collapse a pair to its signed scalar, toward_worst - toward_best.

    (0, INF) is the top of the scale (+INF), (INF, 0) the bottom (-INF);
    since one component is always 0, no INF - INF case can arise.
    """
    return value.toward_worst - value.toward_best


def add_scalar(shift: Degree, vector: UtilityVector) -> UtilityVector:
    """Add one degree to both components (a branch degree reaching a child)."""
    check_degree(shift)
    return UtilityVector(shift + vector.toward_best, shift + vector.toward_worst)


def min_vectors(vectors: Sequence[UtilityVector]) -> UtilityVector:
    """Componentwise minimum of one or more vectors."""
    if not vectors:
        raise EmptyList("minimum of zero utility vectors is undefined")
    return UtilityVector(
        min(v.toward_best for v in vectors),
        min(v.toward_worst for v in vectors),
    )


def compare_standard(left: UtilityValue, right: UtilityValue) -> int:
    """Order two scale values by the standard-lottery rule: -1, 0, or +1.

    Strict preference holds in exactly three situations: both pairs sit on
    the believing-the-best half-line and the left believes it more firmly;
    the left is on the best half-line while the right has tipped toward the
    worst; or both have tipped toward the worst and the left disbelieves
    the best less firmly.  This is the case analysis itself, kept separate
    from (and cross-checked against) the scalar order.
    """
    lb, lw = left.toward_best, left.toward_worst
    rb, rw = right.toward_best, right.toward_worst

    def beats(b1: Degree, w1: Degree, b2: Degree, w2: Degree) -> bool:
        if b1 == 0 and b2 == 0 and w1 > w2:
            return True
        if b1 == 0 and b2 > 0:
            return True
        if b1 < b2 and w1 == 0 and w2 == 0:
            return True
        return False

    if beats(lb, lw, rb, rw):
        return 1
    if beats(rb, rw, lb, lw):
        return -1
    return 0


@dataclass(frozen=True)
class PrizeAssessment:
    """A standard-lottery value for every prize, consistent with preference.

    The best prize must be held with certainty, (0, INF).  Scalars must
    strictly decrease along the prize order; ties would silently break the
    monotonicity of the standard-lottery order.  The worst prize is *not*
    pinned to (INF, 0): assessments may be expressed against a reference
    best/worst pair wider than the prizes at hand, so the worst prize may
    carry any finite bottom value.
    """

    prizes: PrizeSet
    values: tuple[UtilityValue, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != len(self.prizes):
            raise UnassessedPrize(
                f"{len(self.values)} values for {len(self.prizes)} prizes"
            )
        for v in self.values:
            if not isinstance(v, UtilityValue):
                raise InvalidAssessment(f"assessment entries must be scale values, got {v!r}")
        top = self.values[0]
        if top.pair() != (0, INF):
            raise InvalidAssessment(
                f"{self.prizes.best} must map to (0,inf), got "
                f"({top.toward_best}, {top.toward_worst})"
            )
        scalars = [scalar_utility(v) for v in self.values]
        for p, q, a, b in zip(self.prizes, list(self.prizes)[1:], scalars, scalars[1:]):
            if not a > b:
                raise InvalidAssessment(
                    f"utilities must strictly decrease with preference: "
                    f"{p} has {a}, {q} has {b}"
                )

    @classmethod
    def from_map(
        cls,
        prizes: PrizeSet,
        mapping: Mapping[str, UtilityValue | tuple[Degree, Degree]],
    ) -> "PrizeAssessment":
        """Build from a prize -> value mapping; bare pairs are accepted."""
        for p in mapping:
            prizes.index(p)
        missing = [p for p in prizes if p not in mapping]
        if missing:
            raise UnassessedPrize(f"no value for prizes: {missing!r}")
        values = []
        for p in prizes:
            v = mapping[p]
            if not isinstance(v, UtilityValue):
                v = UtilityValue(*v)
            values.append(v)
        return cls(prizes, tuple(values))

    def value_of(self, prize: str) -> UtilityValue:
        return self.values[self.prizes.index(prize)]


def evaluate(lottery: Lottery | SimpleLottery, assessment: PrizeAssessment) -> UtilityValue:
    """Qualitative expected utility of a lottery under an assessment.

    Leaves take their assessed value; a node takes the componentwise
    minimum over branches of branch degree plus child utility.  The result
    is converted back to a scale value at the end, which asserts closure.
    """
    if lottery.prizes != assessment.prizes:
        raise UnassessedPrize("the assessment does not cover this lottery's prize set")
    return _evaluate(lottery, assessment).to_value()


def _evaluate(lottery: Lottery | SimpleLottery, assessment: PrizeAssessment) -> UtilityVector:
    if isinstance(lottery, Leaf):
        return assessment.value_of(lottery.prize)
    if isinstance(lottery, SimpleLottery):
        return min_vectors(
            [add_scalar(d, v) for d, v in zip(lottery.deltas, assessment.values)]
        )
    return min_vectors(
        [add_scalar(d, _evaluate(child, assessment)) for d, child in lottery.branches]
    )


def standard_equivalent(
    lottery: Lottery | SimpleLottery, assessment: PrizeAssessment
) -> SimpleLottery:
    """The unique standard lottery (over best and worst prize) indifferent to this one."""
    value = evaluate(lottery, assessment)
    pair = PrizeSet((assessment.prizes.best, assessment.prizes.worst))
    return SimpleLottery(pair, value.pair())
