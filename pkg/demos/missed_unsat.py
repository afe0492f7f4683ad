#!/usr/bin/env python3
"""The smallest stored counterexample to reduction completeness.

Eighteen distinct clauses over four variables, unsatisfiable by truth
table, yet the sweep engine stops after two productive sweeps with nine
clauses still live.  Only full branch exhaustion settles the instance.
This is the shape of every ClaimViolation row in the differential reports.
"""

from sweepsat import GenConfig, expand, gen_random, reduce_to_fixpoint
from sweepsat.dimacs import format_product, write_dimacs
from sweepsat.oracle import truth_table_solve

formula = gen_random(GenConfig(4, 18, seed=14))
print(write_dimacs(formula))

oracle = truth_table_solve(formula)
print(f"oracle: {oracle.verdict}, models={oracle.model_count}")

form, trace = reduce_to_fixpoint(formula)
print(f"reduction: status={form.status.value} sweeps={trace.sweeps} "
      f"eliminations={trace.eliminations}")
print("residue:", format_product(form.formula))

out = expand(form)
print(f"expansion: kind={out.kind.value} complete={out.complete} "
      f"branches_explored={out.branches_explored} reroutes={out.reroutes}")
print("surviving branches:", len(out.branches))

# the reduction rules only ever pair clauses that are one literal apart or
# in a subset relation; this residue has neither, so the contradiction
# stays invisible to sweeping no matter how many passes run
