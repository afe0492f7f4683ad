#!/usr/bin/env python3
# Branch expansion over an irreducible formula: six unit clauses pin six
# variables, two untouched three-literal clauses each offer three choices,
# and the cross product gives nine surviving branches.

from sweepsat import build_formula, expand, reduce_to_fixpoint
from sweepsat.expand import count_branch_models, format_branch, format_value_line

units = [[1], [3], [6], [7], [9], [11]]          # vars 1..6 pinned
residual = [[13, 15, 17], [19, 21, 23]]          # vars 7,8,9 and 10,11,12
form, trace = reduce_to_fixpoint(build_formula(12, units + residual))
assert trace.steps == ()   # nothing to reduce, the clauses share no variables

out = expand(form)
print(f"kind={out.kind.value} complete={out.complete}")
print(f"branches={len(out.branches)} explored={out.branches_explored} reroutes={out.reroutes}")
for i, (branch, model) in enumerate(zip(out.branches, out.assignments), start=1):
    print(f"{i} {format_branch(branch)}")
    print(" ", format_value_line(model))

# each branch fixes 8 of 12 variables; the free ones widen the branch to
# 2^4 total assignments, and the union over all nine branches counts them once
print("models covered by the union:", count_branch_models(form))

# a visit budget cuts the walk short; complete=False flags the truncation
capped = expand(form, budget=5)
print(
    f"budget=5 -> kind={capped.kind.value} branches={len(capped.branches)} "
    f"complete={capped.complete}"
)

# on a random instance the clauses share variables with mixed signs, so
# many selection paths die and the walk has to re-route
from sweepsat import GenConfig, gen_random

form4, _ = reduce_to_fixpoint(gen_random(GenConfig(6, 25, seed=1)))
out4 = expand(form4)
print(
    f"random 6v/25c: branches={len(out4.branches)} "
    f"explored={out4.branches_explored} reroutes={out4.reroutes}"
)
