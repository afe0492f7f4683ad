#!/usr/bin/env python3
# Walk the sweep engine over the eight-clause all-signs family.
# Every sign pattern over three variables is present, so the formula is
# unsatisfiable, and the merge rule alone is enough to expose that.

from sweepsat import gen_complete_signs, reduce_to_fixpoint
from sweepsat.dimacs import format_product, write_dimacs
from sweepsat.engine import format_trace

formula = gen_complete_signs()
print("input, product notation:", format_product(formula))
print(write_dimacs(formula))

form, trace = reduce_to_fixpoint(formula)

# first sweep pairs clauses that differ in exactly one complemented literal,
# second sweep does the same one width down, third meets the contradiction
print(f"sweeps={trace.sweeps} passes={trace.passes} eliminations={trace.eliminations}")
print(f"status={form.status.value}")
print()
print(format_trace(trace))

# the elimination count never passes 3m, here m=8 so the cap is 24
assert trace.eliminations <= 3 * formula.m

# the pairwise backend discovers the same candidates without sorting;
# traces match step for step
form2, trace2 = reduce_to_fixpoint(formula, backend="pairwise")
print("backends agree:", trace2.steps == trace.steps)

# per-sweep instrumentation from the sorted backend
for i, stats in enumerate(trace.sweep_stats, start=1):
    print(
        f"sweep {i}: records={stats.record_count} comparisons={stats.comparisons} "
        f"candidates={stats.candidates} applied={stats.applied}"
    )
