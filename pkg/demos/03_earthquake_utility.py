"""
Qualitative expected utility: the earthquake forecast
=====================================================

Prizes are earthquake intensities q0 (none) down to q12 (total
destruction).  Each intensity is assessed on a two-sided scale (x, y):
x degrees of disbelief away from the best outcome, y away from the worst.
The forecast itself is a simple lottery over intensities; its utility is
the min-plus analogue of expected utility.

The same problem ships as demos/problems/earthquake.json, so this demo
also shows the file-based route:  kappacalc utility demos/problems/earthquake.json
"""

from pathlib import Path

from kappacalc import evaluate, scalar_utility, standard_equivalent
from kappacalc.problemfile import parse_problem

here = Path(__file__).resolve().parent
problem = parse_problem((here / "problems" / "earthquake.json").read_text())

assessment = problem.assessment
forecast = problem.lottery

print("assessed intensities:")
for prize in assessment.prizes:
    value = assessment.value_of(prize)
    print(f"  {prize}: {value.pair()}  u = {scalar_utility(value)}")

value = evaluate(forecast, assessment)
print("forecast utility:", value.pair())
print("scalar reading:", scalar_utility(value))

# -1 sits strictly between u(q3) = 0 and u(q4) = -2: the forecast is
# worth an earthquake somewhere between intensities 3 and 4.
assert scalar_utility(assessment.value_of("q4")) < scalar_utility(value)
assert scalar_utility(value) < scalar_utility(assessment.value_of("q3"))

# Every lottery is indifferent to a standard one over just best and worst.
std = standard_equivalent(forecast, assessment)
print("standard equivalent:", dict(zip(std.prizes, std.deltas)))
