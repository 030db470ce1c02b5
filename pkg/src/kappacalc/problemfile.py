"""Reading problem files and round-tripping command output.

A problem file is one JSON document with a required `prizes` list (best
first) and optional `assessment`, `lottery`, `decision`, and `prob_lottery`
sections; each command uses the sections it needs and ignores the rest.
A `notes` section is free-form and never interpreted; fixtures use it to
record the hand derivation of their expected values.
Infinity is spelled "inf" (the non-standard JSON Infinity literal is
rejected), degrees are plain integers, and reals appear only in the
probability section.

Two failure families, kept apart because the CLI maps them to different
exit codes: ParseError for a document whose shape is wrong (bad JSON,
wrong types, missing keys), KappaCalcError for a well-shaped document
whose values break a calculus invariant.  `validate_problem` collects the
latter per section instead of stopping at the first.

The emit_*/parse_* pairs below define the machine-readable output of each
command; every pair round-trips exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .decision import DecisionProblem
from .degrees import Degree, INF, Signed
from .disbelief import DisbeliefFunction, Frame
from .errors import KappaCalcError, ParseError
from .lottery import Leaf, Lottery, Node, PrizeSet, SimpleLottery
from .oom_bridge import OrderAgreement, ProbLottery
from .utility import PrizeAssessment, UtilityValue, scalar_utility

KNOWN_SECTIONS = ("prizes", "assessment", "lottery", "decision", "prob_lottery", "notes")


@dataclass(frozen=True)
class ProblemFile:
    """The parsed sections of one problem document."""

    prizes: PrizeSet
    assessment: Optional[PrizeAssessment] = None
    lottery: Optional[Lottery] = None
    decision: Optional[DecisionProblem] = None
    prob_lottery: Optional[ProbLottery] = None
    epsilon: Optional[float] = None


def _reject_constant(name: str):
    raise ParseError(f"JSON constant {name} is not allowed; write \"inf\"")


def _load_json(text: str) -> Any:
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from None


def _need(doc: dict, key: str, kind: type, where: str) -> Any:
    if key not in doc:
        raise ParseError(f"{where}: missing required key {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"{where}: {key!r} must be a {kind.__name__}")
    return value


def _string_list(value: Any, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"{where}: expected a list of strings")
    return value


def degree_from_json(value: Any, where: str) -> Degree:
    if value == "inf":
        return INF
    if isinstance(value, int) and not isinstance(value, bool) and value >= 0:
        return value
    raise ParseError(f"{where}: expected a non-negative integer or \"inf\", got {value!r}")


def degree_to_json(value: Degree) -> Any:
    return "inf" if value == INF else int(value)


def signed_from_json(value: Any, where: str) -> Signed:
    if value in ("inf", "+inf"):
        return INF
    if value == "-inf":
        return -INF
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    raise ParseError(f"{where}: expected an integer, \"+inf\", or \"-inf\", got {value!r}")


def signed_to_json(value: Signed) -> Any:
    if value == INF:
        return "+inf"
    if value == -INF:
        return "-inf"
    return int(value)


def _real_list(value: Any, where: str) -> list[float]:
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list of numbers")
    out = []
    for x in value:
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ParseError(f"{where}: expected a number, got {x!r}")
        out.append(float(x))
    return out


def _parse_prizes(doc: dict) -> PrizeSet:
    labels = _string_list(_need(doc, "prizes", list, "document"), "prizes")
    return PrizeSet(tuple(labels))


def _parse_assessment(section: Any, prizes: PrizeSet) -> PrizeAssessment:
    if not isinstance(section, dict):
        raise ParseError("assessment: expected an object mapping prize to [k1, kr]")
    mapping = {}
    for prize, pair in section.items():
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"assessment: {prize!r} must map to a [k1, kr] pair")
        mapping[prize] = (
            degree_from_json(pair[0], f"assessment[{prize!r}]"),
            degree_from_json(pair[1], f"assessment[{prize!r}]"),
        )
    return PrizeAssessment.from_map(prizes, mapping)


def _parse_lottery(section: Any, prizes: PrizeSet, where: str = "lottery") -> Lottery:
    if isinstance(section, str):
        return Leaf(section, prizes)
    if isinstance(section, list):
        branches = []
        for i, entry in enumerate(section):
            spot = f"{where}[{i}]"
            if not isinstance(entry, dict):
                raise ParseError(f"{spot}: expected an object with delta and child")
            extra = set(entry) - {"delta", "child"}
            if extra:
                raise ParseError(f"{spot}: unknown keys {sorted(extra)!r}")
            if "delta" not in entry or "child" not in entry:
                raise ParseError(f"{spot}: needs both delta and child")
            delta = degree_from_json(entry["delta"], f"{spot}.delta")
            child = _parse_lottery(entry["child"], prizes, f"{spot}.child")
            branches.append((delta, child))
        return Node(tuple(branches))
    raise ParseError(f"{where}: expected a prize name or a list of branches")


def _parse_decision(
    section: Any, prizes: PrizeSet, assessment: Optional[PrizeAssessment]
) -> DecisionProblem:
    if not isinstance(section, dict):
        raise ParseError("decision: expected an object")
    if assessment is None:
        raise ParseError("decision: needs an assessment section to rank against")
    states = Frame(tuple(_string_list(_need(section, "states", list, "decision"), "decision.states")))
    potential = tuple(
        degree_from_json(v, "decision.belief")
        for v in _need(section, "belief", list, "decision")
    )
    acts = tuple(_string_list(_need(section, "acts", list, "decision"), "decision.acts"))
    outcome = _need(section, "outcome", dict, "decision")
    for act in outcome:
        if act not in acts:
            raise ParseError(f"decision.outcome: unknown act {act!r}")
    rows = []
    for act in acts:
        if act not in outcome:
            raise ParseError(f"decision.outcome: no row for act {act!r}")
        row = _string_list(outcome[act], f"decision.outcome[{act!r}]")
        if len(row) != len(states):
            raise ParseError(
                f"decision.outcome[{act!r}]: {len(row)} entries for {len(states)} states"
            )
        rows.append(tuple(row))
    belief = DisbeliefFunction(states, potential)
    return DecisionProblem(
        states=states,
        acts=acts,
        outcome=tuple(rows),
        belief=belief,
        prizes=prizes,
        assessment=assessment,
    )


def _parse_prob_lottery(section: Any, prizes: PrizeSet) -> tuple[ProbLottery, Optional[float]]:
    if not isinstance(section, dict):
        raise ParseError("prob_lottery: expected an object")
    probs = _real_list(_need(section, "probs", list, "prob_lottery"), "prob_lottery.probs")
    utils = _real_list(_need(section, "utils", list, "prob_lottery"), "prob_lottery.utils")
    epsilon = None
    if "epsilon" in section:
        raw = section["epsilon"]
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise ParseError("prob_lottery.epsilon: expected a number")
        epsilon = float(raw)
    return ProbLottery(prizes, tuple(probs), tuple(utils)), epsilon


def parse_problem(text: str) -> ProblemFile:
    """Parse a problem document, raising on the first defect of any kind."""
    problem, diagnostics = _build_problem(text, collect=False)
    assert not diagnostics
    return problem


def validate_problem(text: str) -> list[str]:
    """All calculus-invariant diagnostics in the document, section by section.

    Shape defects still raise ParseError immediately; an empty list means
    the document is clean.
    """
    _, diagnostics = _build_problem(text, collect=True)
    return diagnostics


def _build_problem(text: str, collect: bool) -> tuple[Optional[ProblemFile], list[str]]:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("document: expected a JSON object at the top level")
    unknown = set(doc) - set(KNOWN_SECTIONS)
    if unknown:
        raise ParseError(f"document: unknown sections {sorted(unknown)!r}")
    diagnostics: list[str] = []

    def run(section: str, thunk):
        try:
            return thunk()
        except KappaCalcError as e:
            if not collect:
                raise
            diagnostics.append(f"{section}: {type(e).__name__}: {e}")
            return None

    prizes = run("prizes", lambda: _parse_prizes(doc))
    if prizes is None:
        return None, diagnostics
    assessment = lottery = decision = prob = None
    epsilon = None
    if "assessment" in doc:
        assessment = run("assessment", lambda: _parse_assessment(doc["assessment"], prizes))
    if "lottery" in doc:
        lottery = run("lottery", lambda: _parse_lottery(doc["lottery"], prizes))
    if "decision" in doc:
        if collect and "assessment" in doc and assessment is None:
            diagnostics.append("decision: skipped (assessment section is invalid)")
        else:
            decision = run(
                "decision", lambda: _parse_decision(doc["decision"], prizes, assessment)
            )
    if "prob_lottery" in doc:
        parsed = run("prob_lottery", lambda: _parse_prob_lottery(doc["prob_lottery"], prizes))
        if parsed is not None:
            prob, epsilon = parsed
    problem = ProblemFile(
        prizes=prizes,
        assessment=assessment,
        lottery=lottery,
        decision=decision,
        prob_lottery=prob,
        epsilon=epsilon,
    )
    return problem, diagnostics


# ---------------------------------------------------------------------------
# Command output: emitters and their inverse parsers.

def emit_simple_lottery(lottery: SimpleLottery) -> dict:
    return {
        "prizes": list(lottery.prizes),
        "deltas": [degree_to_json(d) for d in lottery.deltas],
    }


def parse_simple_lottery(doc: dict) -> SimpleLottery:
    prizes = PrizeSet(tuple(_string_list(_need(doc, "prizes", list, "lottery"), "prizes")))
    deltas = tuple(
        degree_from_json(v, "deltas") for v in _need(doc, "deltas", list, "lottery")
    )
    return SimpleLottery(prizes, deltas)


def emit_utility_value(value: UtilityValue) -> dict:
    return {
        "value": [degree_to_json(value.toward_best), degree_to_json(value.toward_worst)],
        "scalar": signed_to_json(scalar_utility(value)),
    }


def parse_utility_value(doc: dict) -> UtilityValue:
    pair = _need(doc, "value", list, "utility")
    if len(pair) != 2:
        raise ParseError("utility: value must be a [k1, kr] pair")
    return UtilityValue(
        degree_from_json(pair[0], "utility.value"),
        degree_from_json(pair[1], "utility.value"),
    )


def emit_ranking(
    utility_order: list[tuple[str, UtilityValue]],
    maximin_order: list[tuple[str, int]],
    prizes: PrizeSet,
) -> dict:
    disagree = bool(utility_order and maximin_order
                    and utility_order[0][0] != maximin_order[0][0])
    return {
        "utility": [
            {"act": act, **emit_utility_value(value)} for act, value in utility_order
        ],
        "maximin": [
            {"act": act, "worst_index": index, "worst_prize": prizes.prizes[index]}
            for act, index in maximin_order
        ],
        "disagreement": disagree,
    }


def parse_ranking(doc: dict) -> tuple[list[tuple[str, UtilityValue]], list[tuple[str, int]], bool]:
    utility_order = [
        (_need(entry, "act", str, "ranking"), parse_utility_value(entry))
        for entry in _need(doc, "utility", list, "ranking")
    ]
    maximin_order = [
        (
            _need(entry, "act", str, "ranking"),
            _need(entry, "worst_index", int, "ranking"),
        )
        for entry in _need(doc, "maximin", list, "ranking")
    ]
    flag = doc.get("disagreement")
    if not isinstance(flag, bool):
        raise ParseError("ranking: disagreement must be a boolean")
    return utility_order, maximin_order, flag


def emit_bridge(converted: SimpleLottery, report: OrderAgreement) -> dict:
    return {
        "spohnian": emit_simple_lottery(converted),
        "kappa_of_eu": degree_to_json(report.kappa_of_eu),
        "qualitative_eu": degree_to_json(report.qualitative_eu),
        "gap": int(report.gap),
        "eu": report.eu,
    }


def parse_bridge(doc: dict) -> tuple[SimpleLottery, OrderAgreement]:
    converted = parse_simple_lottery(_need(doc, "spohnian", dict, "bridge"))
    eu = doc.get("eu")
    if isinstance(eu, bool) or not isinstance(eu, (int, float)):
        raise ParseError("bridge: eu must be a number")
    report = OrderAgreement(
        kappa_of_eu=degree_from_json(doc.get("kappa_of_eu"), "bridge.kappa_of_eu"),
        qualitative_eu=degree_from_json(doc.get("qualitative_eu"), "bridge.qualitative_eu"),
        gap=_need(doc, "gap", int, "bridge"),
        eu=float(eu),
    )
    return converted, report


def emit_diagnostics(diagnostics: list[str]) -> dict:
    return {"ok": not diagnostics, "diagnostics": list(diagnostics)}


def dumps(doc: dict) -> str:
    """The one JSON serialization used everywhere: sorted keys, 2-space
    indent, no NaN/Infinity literals, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"
