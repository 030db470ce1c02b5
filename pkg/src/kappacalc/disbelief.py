"""Disbelief functions over finite frames of possible worlds.

A disbelief function ranks worlds by implausibility: 0 means "not
disbelieved", larger values mean "more firmly disbelieved", ``INF`` means
"disbelieved with certainty".  The representation is a potential, one degree
per world; the degree of an event is the minimum over its members (axiom
S2), and the potential's own minimum must be 0 (axiom S1).  Conditioning
(axiom S3) shifts the surviving worlds down by the event's degree.

Everything here is immutable and purely functional; values can be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .degrees import Degree, INF, Signed, check_degrees, normalize_degrees
from .errors import (
    AllInfinite,
    ConditionOnDisbelievedCertainty,
    DuplicateLabel,
    FrameMismatch,
    IncompleteGrouping,
    LengthMismatch,
    NotNormalized,
    UnknownWorld,
)


@dataclass(frozen=True)
class Frame:
    """An ordered set of distinct world labels; order fixes the indexing."""

    worlds: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        if not self.worlds:
            raise LengthMismatch("a frame needs at least one world")
        if len(set(self.worlds)) != len(self.worlds):
            raise DuplicateLabel(f"frame labels repeat: {self.worlds!r}")

    def __len__(self) -> int:
        return len(self.worlds)

    def __iter__(self):
        return iter(self.worlds)

    def __contains__(self, world: str) -> bool:
        return world in self.worlds

    def index(self, world: str) -> int:
        try:
            return self.worlds.index(world)
        except ValueError:
            raise UnknownWorld(f"world {world!r} is not in the frame") from None

    def indices(self, event: Iterable[str]) -> tuple[int, ...]:
        """Indices of an event's worlds, in frame order; rejects strangers."""
        members = set(event)
        unknown = members - set(self.worlds)
        if unknown:
            raise UnknownWorld(f"not in the frame: {sorted(unknown)!r}")
        return tuple(i for i, w in enumerate(self.worlds) if w in members)


@dataclass(frozen=True)
class DisbeliefFunction:
    """A normalized disbelief potential over a frame.

    The constructor is strict: the potential must already satisfy S1
    (minimum exactly 0).  Use :meth:`from_raw` to repair an unnormalized
    vector by shifting.
    """

    frame: Frame
    potential: tuple[Degree, ...]

    def __post_init__(self):
        object.__setattr__(self, "potential", check_degrees(self.potential))
        if len(self.potential) != len(self.frame):
            raise LengthMismatch(
                f"potential has {len(self.potential)} entries for {len(self.frame)} worlds"
            )
        finite = [v for v in self.potential if v != INF]
        if not finite:
            raise AllInfinite("potential is infinite everywhere")
        low = min(finite)
        if low != 0:
            raise NotNormalized(f"S1 violated: minimum degree is {low}, expected 0")

    @classmethod
    def from_raw(cls, frame: Frame, values: Iterable[Degree]) -> "DisbeliefFunction":
        """Normalize a raw potential (shift so the minimum is 0) and wrap it."""
        return cls(frame, normalize_degrees(values))

    def degree(self, event: Iterable[str]) -> Degree:
        """Degree of disbelief of an event: min over members, INF if empty (S2)."""
        idx = self.frame.indices(event)
        if not idx:
            return INF
        return min(self.potential[i] for i in idx)

    def condition(self, event: Iterable[str]) -> "DisbeliefFunction":
        """Revise on an event (S3): outside worlds go to INF, inside shift down."""
        members = set(event)
        shift = self.degree(members)
        if shift == INF:
            raise ConditionOnDisbelievedCertainty(
                "cannot condition on an event disbelieved with certainty"
            )
        shifted = tuple(
            (v - shift if v != INF else INF) if w in members else INF
            for w, v in zip(self.frame.worlds, self.potential)
        )
        return DisbeliefFunction(self.frame, shifted)

    def combine(self, other: "DisbeliefFunction") -> "DisbeliefFunction":
        """Pointwise addition of potentials, renormalized.

        Raw pointwise sums generally break S1, so the result is shifted back
        to a zero minimum.  Fully contradictory sources (every world infinite
        in one or the other) raise ``AllInfinite``.
        """
        if other.frame != self.frame:
            raise FrameMismatch("combine needs both functions on the same frame")
        raw = tuple(a + b for a, b in zip(self.potential, other.potential))
        return DisbeliefFunction.from_raw(self.frame, raw)

    def marginalize(self, grouping: Mapping[str, str]) -> "DisbeliefFunction":
        """Coarsen the frame; each group's degree is the minimum over its preimage.

        ``grouping`` maps every world to a coarse label.  Coarse labels are
        ordered by first appearance along the fine frame.  The result
        satisfies S1 automatically.
        """
        unknown = set(grouping) - set(self.frame.worlds)
        if unknown:
            raise UnknownWorld(f"grouping mentions unknown worlds: {sorted(unknown)!r}")
        missing = [w for w in self.frame.worlds if w not in grouping]
        if missing:
            raise IncompleteGrouping(f"no group for worlds: {missing!r}")
        coarse: list[str] = []
        lows: dict[str, Degree] = {}
        for w, v in zip(self.frame.worlds, self.potential):
            label = grouping[w]
            if label not in lows:
                coarse.append(label)
                lows[label] = v
            else:
                lows[label] = min(lows[label], v)
        return DisbeliefFunction(Frame(tuple(coarse)), tuple(lows[c] for c in coarse))

    def belief(self, event: Iterable[str]) -> Signed:
        """Signed belief in an event.

        Positive m: believed to degree m (the complement is disbelieved).
        Negative m: disbelieved to degree -m.  Zero: neither.  The whole
        frame is believed with certainty (+INF), the empty event disbelieved
        with certainty (-INF).
        """
        members = set(event)
        d = self.degree(members)
        if d > 0:
            return -d
        complement = [w for w in self.frame.worlds if w not in members]
        return self.degree(complement)

    def independent(self, event_a: Iterable[str], event_b: Iterable[str]) -> bool:
        """Whether two events' degrees compose additively over their intersection."""
        a, b = set(event_a), set(event_b)
        return self.degree(a & b) == self.degree(a) + self.degree(b)
