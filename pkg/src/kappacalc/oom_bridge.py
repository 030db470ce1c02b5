"""Order-of-magnitude reading of probabilities, and the agreement check.

kappa_of(p) counts the leading zeros of p in base epsilon: floor of
-log_eps(p), with the class boundaries closed on the right so that an
exact power eps**-k maps to k.  The float log is only a first guess; the
answer is certified by exact rational comparison (every float is a
rational), with a relative 1e-12 snap for inputs that were meant to be a
boundary but picked up float noise on the way in.

The bridge then compares two ways of valuing a probabilistic lottery:
kappa of its quantitative expected utility, versus the min-plus combination
min_i(kappa(p_i) + kappa(u_i)).  They agree only up to a bounded gap;
order_agreement reports the gap instead of pretending it is zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .degrees import Degree, INF
from .errors import LengthMismatch, NotNormalized, OutOfRange
from .lottery import PrizeSet, SimpleLottery

PROB_SUM_TOL = 1e-9
BOUNDARY_RTOL = Fraction(1, 10**12)


@dataclass(frozen=True)
class EpsilonBase:
    """The base of the order-of-magnitude scale; any real > 1."""

    epsilon: float = 10.0

    def __post_init__(self):
        e = self.epsilon
        if not isinstance(e, (int, float)) or isinstance(e, bool):
            raise OutOfRange(f"epsilon must be a real number, got {e!r}")
        if not math.isfinite(e) or e <= 1:
            raise OutOfRange(f"epsilon must be finite and > 1, got {e!r}")
        object.__setattr__(self, "epsilon", float(e))


Epsilon = Union[EpsilonBase, float, int]


def _epsilon_value(eps: Epsilon) -> float:
    if isinstance(eps, EpsilonBase):
        return eps.epsilon
    return EpsilonBase(eps).epsilon


def kappa_of(p: float, eps: Epsilon = 10.0) -> Degree:
    """Degree of disbelief of probability p: floor(-log_eps(p)).

    0 maps to INF, 1 to 0; otherwise k such that eps**-(k+1) < p <= eps**-k.
    The log-based guess is corrected by exact rational comparison, and a
    value within relative 1e-12 of a class boundary is treated as the
    boundary itself.
    """
    e = _epsilon_value(eps)
    if isinstance(p, bool) or not isinstance(p, (int, float)):
        raise OutOfRange(f"probability must be a real number, got {p!r}")
    if math.isnan(p) or p < 0 or p > 1:
        raise OutOfRange(f"probability must lie in [0, 1], got {p!r}")
    if p == 0:
        return INF
    if p == 1:
        return 0

    guess = math.floor(-math.log(p) / math.log(e))
    P = Fraction(p)
    E = Fraction(e)
    k = max(guess, 0)
    # Certify eps**-(k+1) < p <= eps**-k, stepping if the log was off.
    while P * E**k > 1:
        k -= 1
    while P * E ** (k + 1) <= 1:
        k += 1
    k = max(k, 0)
    # Snap: p just above the lower boundary eps**-(k+1) was probably meant
    # to be exactly that boundary, which belongs to class k+1.
    lower = Fraction(1) / E ** (k + 1)
    if abs(P - lower) <= lower * BOUNDARY_RTOL:
        return k + 1
    return k


@dataclass(frozen=True)
class ProbLottery:
    """A probability vector and normalized prize utilities, in prize order.

    Probabilities are non-negative and sum to 1 within 1e-9.  Utilities
    are reals in [0, 1], weakly decreasing along the prize order, with the
    best prize at exactly 1 and the worst at exactly 0.
    """

    prizes: PrizeSet
    probs: tuple[float, ...]
    utils: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "probs", tuple(float(p) for p in self.probs))
        object.__setattr__(self, "utils", tuple(float(u) for u in self.utils))
        r = len(self.prizes)
        if len(self.probs) != r:
            raise LengthMismatch(f"{len(self.probs)} probabilities for {r} prizes")
        if len(self.utils) != r:
            raise LengthMismatch(f"{len(self.utils)} utilities for {r} prizes")
        for p in self.probs:
            if math.isnan(p) or p < 0 or p > 1:
                raise OutOfRange(f"probability out of [0, 1]: {p!r}")
        total = math.fsum(self.probs)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise NotNormalized(f"probabilities sum to {total!r}, expected 1")
        for u in self.utils:
            if math.isnan(u) or u < 0 or u > 1:
                raise OutOfRange(f"utility out of [0, 1]: {u!r}")
        if self.utils[0] != 1.0:
            raise OutOfRange(f"best prize utility must be 1, got {self.utils[0]!r}")
        if self.utils[-1] != 0.0:
            raise OutOfRange(f"worst prize utility must be 0, got {self.utils[-1]!r}")
        for a, b in zip(self.utils, self.utils[1:]):
            if a < b:
                raise OutOfRange(
                    f"utilities must weakly decrease along the prize order: "
                    f"{a!r} before {b!r}"
                )


def spohnian_from_prob(lottery: ProbLottery, eps: Epsilon = 10.0) -> SimpleLottery:
    """Convert each probability to its kappa and renormalize.

    The floor can leave every kappa positive (all probabilities below
    1/eps), so the vector is shifted back onto the scale afterwards.
    """
    kappas = [kappa_of(p, eps) for p in lottery.probs]
    return SimpleLottery.from_raw(lottery.prizes, kappas)


def vnm_eu(lottery: ProbLottery) -> float:
    """Quantitative expected utility: the probability-utility dot product."""
    return math.fsum(p * u for p, u in zip(lottery.probs, lottery.utils))


@dataclass(frozen=True)
class OrderAgreement:
    """Both valuations of one lottery, and how far apart they landed.

    gap = kappa_of_eu - qualitative_eu.  When every positive-utility prize
    has probability 0 both sides are INF and the gap is 0 by convention:
    the valuations agree the lottery is worthless.
    """

    kappa_of_eu: Degree
    qualitative_eu: Degree
    gap: int
    eu: float


def order_agreement(lottery: ProbLottery, eps: Epsilon = 10.0) -> OrderAgreement:
    """Compare kappa of the expected utility with the min-plus valuation.

    Zero-utility prizes contribute nothing to the expected utility and an
    INF term to the min, so they are excluded from both sides; the report
    carries the (bounded) disagreement between what remains.
    """
    eu = vnm_eu(lottery)
    kappa_eu = kappa_of(eu, eps)
    terms = [
        kappa_of(p, eps) + kappa_of(u, eps)
        for p, u in zip(lottery.probs, lottery.utils)
        if u > 0
    ]
    qualitative = min(terms) if terms else INF
    if kappa_eu == INF and qualitative == INF:
        gap = 0
    else:
        gap = kappa_eu - qualitative
    return OrderAgreement(kappa_eu, qualitative, int(gap), eu)


def agreement_bound(num_prizes: int, eps: Epsilon = 10.0) -> int:
    """The guaranteed cap on |gap| for lotteries with this many prizes."""
    e = _epsilon_value(eps)
    if num_prizes < 2:
        raise OutOfRange(f"a lottery has at least 2 prizes, got {num_prizes}")
    return math.ceil(math.log(num_prizes) / math.log(e)) + 1
