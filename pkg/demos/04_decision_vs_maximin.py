"""
When utility ranking and maximin disagree
=========================================

Maximin ranks acts by their worst reachable prize.  The qualitative
utility ranking weighs how disbelieved that worst case is.  An act with a
bad but firmly disbelieved downside can beat a safe act on utility while
losing on maximin; the two orders come apart.
"""

from pathlib import Path

from kappacalc import (
    act_lottery,
    find_maximin_disagreement,
    maximin_rank,
    rank_acts,
    scalar_utility,
)
from kappacalc.problemfile import parse_problem

here = Path(__file__).resolve().parent
problem = parse_problem((here / "problems" / "ab_witness.json").read_text())
decision = problem.decision

# Act A gambles: the great prize o1 unless the disbelieved state happens,
# in which case the bottom prize o3.  Act B always pays the middling o2.
for act in decision.acts:
    lottery = act_lottery(decision, act)
    print(f"{act} induces:", dict(zip(lottery.prizes, lottery.deltas)))

print("utility ranking:")
for act, value in rank_acts(decision):
    print(f"  {act} {value.pair()}  u = {scalar_utility(value)}")

print("maximin ranking:")
for act, worst_index in maximin_rank(decision):
    print(f"  {act} worst {decision.prizes.prizes[worst_index]}")

# The search below re-derives a witness like this from scratch: smallest
# assessments over 3 prizes with degrees up to 5 where the top acts differ.
witness = find_maximin_disagreement(3, 5)
assert witness is not None
print("search found acts:", witness.acts)
print("  utility favours:", rank_acts(witness)[0][0])
print("  maximin favours:", maximin_rank(witness)[0][0])
