"""Acts over uncertain states: ranking by qualitative expected utility.

A decision problem pairs a disbelief function over states with an outcome
table mapping (act, state) to a prize.  Each act induces a simple lottery
(min of the state potentials reaching each prize), acts are ranked by the
scalar utility of that lottery, and a separate maximin ranking orders acts
by their worst reachable prize.  The two rules genuinely disagree;
`find_maximin_disagreement` searches small problem spaces for a witness.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .degrees import Degree, INF, Signed
from .disbelief import DisbeliefFunction, Frame
from .errors import (
    DuplicateLabel,
    EmptyList,
    FrameMismatch,
    KappaCalcError,
    OutOfRange,
    PrizeSetMismatch,
    UnknownAct,
    UnknownWorld,
)
from .lottery import PrizeSet, SimpleLottery
from .utility import (
    PrizeAssessment,
    UtilityValue,
    evaluate,
    scalar_utility,
)

SEARCH_BOUND_ENV = "KAPPA_SEARCH_BOUND"


@dataclass(frozen=True)
class DecisionProblem:
    """An outcome table plus beliefs over states and assessed prizes.

    `outcome` may be given as a mapping from (act, state) pairs to prize
    labels; it is stored canonically as one row of prizes per act, in
    state order.  The table must be total and every prize known.
    """

    states: Frame
    acts: tuple[str, ...]
    outcome: tuple[tuple[str, ...], ...]
    belief: DisbeliefFunction
    prizes: PrizeSet
    assessment: PrizeAssessment

    def __post_init__(self):
        object.__setattr__(self, "acts", tuple(self.acts))
        if not self.acts:
            raise EmptyList("a decision problem needs at least one act")
        if len(set(self.acts)) != len(self.acts):
            raise DuplicateLabel(f"act labels repeat: {self.acts!r}")
        object.__setattr__(self, "outcome", self._canonical_outcome(self.outcome))
        if self.belief.frame != self.states:
            raise FrameMismatch("belief is not over this problem's states")
        if self.assessment.prizes != self.prizes:
            raise PrizeSetMismatch("assessment does not cover this problem's prizes")

    def _canonical_outcome(self, raw) -> tuple[tuple[str, ...], ...]:
        if isinstance(raw, Mapping):
            for act, state in raw:
                if act not in self.acts:
                    raise UnknownAct(f"outcome table mentions unknown act {act!r}")
                if state not in self.states:
                    raise UnknownWorld(f"outcome table mentions unknown state {state!r}")
            rows = []
            for act in self.acts:
                row = []
                for state in self.states:
                    try:
                        row.append(raw[(act, state)])
                    except KeyError:
                        raise KappaCalcError(
                            f"outcome table has no entry for ({act!r}, {state!r})"
                        ) from None
                rows.append(tuple(row))
            table = tuple(rows)
        else:
            table = tuple(tuple(row) for row in raw)
        if len(table) != len(self.acts):
            raise UnknownAct(f"{len(table)} outcome rows for {len(self.acts)} acts")
        for act, row in zip(self.acts, table):
            if len(row) != len(self.states):
                raise UnknownWorld(
                    f"outcome row for {act!r} has {len(row)} entries, "
                    f"expected {len(self.states)}"
                )
            for prize in row:
                self.prizes.index(prize)
        return table

    def prize_for(self, act: str, state: str) -> str:
        return self.outcome[self._act_index(act)][self.states.index(state)]

    def _act_index(self, act: str) -> int:
        try:
            return self.acts.index(act)
        except ValueError:
            raise UnknownAct(f"{act!r} is not an act of this problem") from None


def act_lottery(problem: DecisionProblem, act: str) -> SimpleLottery:
    """The simple lottery an act induces: per prize, min potential over
    the states that yield it; INF for prizes no state reaches."""
    row = problem.outcome[problem._act_index(act)]
    deltas = []
    for prize in problem.prizes:
        reached = [
            v for target, v in zip(row, problem.belief.potential) if target == prize
        ]
        deltas.append(min(reached) if reached else INF)
    # S1 on the belief guarantees some state has potential 0, so the
    # prize it reaches gets delta 0 and no renormalization is needed.
    return SimpleLottery(problem.prizes, tuple(deltas))


def rank_acts(problem: DecisionProblem) -> list[tuple[str, UtilityValue]]:
    """Acts with their qualitative expected utilities, best first.

    Sorting is stable, so equally good acts keep their input order.
    """
    ranked = [
        (act, evaluate(act_lottery(problem, act), problem.assessment))
        for act in problem.acts
    ]
    ranked.sort(key=lambda pair: scalar_utility(pair[1]), reverse=True)
    return ranked


def worst_prize_index(lottery: SimpleLottery) -> int:
    """Index of the least preferred prize the lottery can actually yield."""
    reachable = [i for i, d in enumerate(lottery.deltas) if d != INF]
    return max(reachable)


def maximin_rank(problem: DecisionProblem) -> list[tuple[str, int]]:
    """Acts ordered by their worst reachable prize, most preferred worst
    first; ties keep input order."""
    ranked = [
        (act, worst_prize_index(act_lottery(problem, act))) for act in problem.acts
    ]
    ranked.sort(key=lambda pair: pair[1])
    return ranked


def _scalar_ladder(max_delta: int) -> list[Signed]:
    """Candidate assessment scalars, best to worst, endpoints included."""
    return [INF] + list(range(max_delta, -max_delta - 1, -1)) + [-INF]


def _value_for_scalar(s: Signed) -> UtilityValue:
    if s >= 0:
        return UtilityValue(0, s)
    return UtilityValue(-s, 0)


def _delta_vectors(r: int, max_delta: int) -> list[tuple[Degree, ...]]:
    """All normalized delta vectors over r prizes with entries in
    {0..max_delta} or INF."""
    domain = list(range(max_delta + 1)) + [INF]
    vectors = []
    for combo in itertools.product(domain, repeat=r):
        if min(combo) == 0:
            vectors.append(combo)
    return vectors


def _search_bound() -> Optional[int]:
    raw = os.environ.get(SEARCH_BOUND_ENV)
    if raw is None:
        return None
    try:
        bound = int(raw)
    except ValueError:
        raise OutOfRange(f"{SEARCH_BOUND_ENV} must be an integer, got {raw!r}") from None
    if bound < 0:
        raise OutOfRange(f"{SEARCH_BOUND_ENV} must be non-negative, got {bound}")
    return bound


def _problem_from_vectors(
    r: int,
    scalars: Sequence[Signed],
    vec_a: tuple[Degree, ...],
    vec_b: tuple[Degree, ...],
) -> DecisionProblem:
    """Package two delta vectors as an explicit two-act problem.

    States form an r x r product grid s_ij with potential a_i + b_j, so
    act A's row recovers vector a and act B's recovers b after the min.
    """
    prizes = PrizeSet(tuple(f"o{i + 1}" for i in range(r)))
    assessment = PrizeAssessment(
        prizes, tuple(_value_for_scalar(s) for s in scalars)
    )
    labels = []
    potential = []
    table_a = []
    table_b = []
    for i in range(r):
        for j in range(r):
            if vec_a[i] == INF and vec_b[j] == INF:
                continue  # an impossible state that reaches nothing useful
            labels.append(f"s{i + 1}{j + 1}")
            potential.append(vec_a[i] + vec_b[j])
            table_a.append(prizes.prizes[i])
            table_b.append(prizes.prizes[j])
    states = Frame(tuple(labels))
    belief = DisbeliefFunction(states, tuple(potential))
    return DecisionProblem(
        states=states,
        acts=("A", "B"),
        outcome=(tuple(table_a), tuple(table_b)),
        belief=belief,
        prizes=prizes,
        assessment=assessment,
    )


def find_maximin_disagreement(
    max_prizes: int,
    max_delta: int,
    num_acts: int = 2,
) -> Optional[DecisionProblem]:
    """Search two-act problems for a qualitative-vs-maximin disagreement.

    Returns the first problem, in a fixed enumeration order, where the
    utility ranking strictly prefers one act and the maximin ranking
    strictly prefers the other; None when the bounded space has no such
    pair.  The KAPPA_SEARCH_BOUND environment variable, when set, caps
    how many act pairs are examined.
    """
    if max_prizes < 2 or max_delta < 0:
        raise OutOfRange(
            f"need at least 2 prizes and a non-negative delta bound, "
            f"got ({max_prizes}, {max_delta})"
        )
    if num_acts < 2:
        return None
    bound = _search_bound()
    examined = 0
    for r in range(2, max_prizes + 1):
        vectors = _delta_vectors(r, max_delta)
        worsts = [max(i for i, d in enumerate(v) if d != INF) for v in vectors]
        ladder = _scalar_ladder(max_delta)
        # Non-best prizes take any strictly decreasing scalar run; the
        # best prize is pinned to +INF by the assessment rule.
        for tail in itertools.combinations(ladder[1:], r - 1):
            scalars = (INF,) + tail
            values = [_value_for_scalar(s) for s in scalars]
            utilities = []
            for vec in vectors:
                best = min(d + v.toward_best for d, v in zip(vec, values))
                worst = min(d + v.toward_worst for d, v in zip(vec, values))
                utilities.append(worst - best)
            for ia, vec_a in enumerate(vectors):
                for ib, vec_b in enumerate(vectors):
                    if bound is not None and examined >= bound:
                        return None
                    examined += 1
                    if utilities[ia] > utilities[ib] and worsts[ia] > worsts[ib]:
                        return _problem_from_vectors(r, scalars, vec_a, vec_b)
    return None
