"""
Degrees of disbelief over a finite frame
========================================

A disbelief function grades how implausible each world is: 0 means "not
ruled out at all", 2 means "would take two surprises to accept", INF means
"impossible".  Run me with  python3 demos/01_disbelief_basics.py
"""

from kappacalc import INF, DisbeliefFunction, Frame

# Tomorrow's weather, with snow firmly disbelieved and hail ruled out.
weather = Frame(("sun", "rain", "snow", "hail"))
kappa = DisbeliefFunction(weather, (0, 1, 3, INF))

print("potential:", dict(zip(weather, kappa.potential)))

# An event's degree is the minimum over its members (you disbelieve a
# disjunction only as much as its most plausible disjunct).
print("degree(rain or snow):", kappa.degree(("rain", "snow")))
print("degree(whole frame):", kappa.degree(tuple(weather)))
print("degree(empty event):", kappa.degree(()))

# Belief is signed: positive means believed, negative disbelieved.
print("belief(sun or rain):", kappa.belief(("sun", "rain")))
print("belief(snow):", kappa.belief(("snow",)))

# Conditioning on "no sun" shifts the survivors down so the minimum is 0
# again; everything outside the event becomes impossible.
no_sun = kappa.condition(("rain", "snow", "hail"))
print("after learning not-sun:", dict(zip(weather, no_sun.potential)))

# Two independent sources combine by adding pointwise, then renormalizing.
forecast = DisbeliefFunction(weather, (2, 0, 0, 1))
merged = kappa.combine(forecast)
print("combined with a forecast:", dict(zip(weather, merged.potential)))

# Coarsening: group worlds and keep the minimum per group.
wet_or_dry = kappa.marginalize(
    {"sun": "dry", "rain": "wet", "snow": "wet", "hail": "wet"}
)
print("coarsened:", dict(zip(wet_or_dry.frame, wet_or_dry.potential)))
