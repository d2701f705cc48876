"""Walk a BC_n Bailey chain from the unit pair and watch beta track its closed forms.

Run with ``python3 demos/bailey_chain_walk.py [steps] [n] [k] [seed]``.  Each
step applies the one-parameter Bailey lemma at freshly drawn rational
``sigma`` and ``rho``; the report for step ``s`` compares the new ``beta``
against the nested product it should equal.
"""
import sys

from bcbailey.cli import run_chain
from bcbailey.report import jsonable

args = [int(a) for a in sys.argv[1:]]
steps, n, k, seed = args + [3, 2, 2, 0][len(args):]
reports = run_chain(steps, n, k, seed)
print(reports[0].notes[0])
for rep in reports:
    print(f"\nstep {rep.params['step']}: {rep.verdict}")
    for lam, v in list(getattr(rep, "beta", {}).items())[:4]:
        print(f"  beta{lam} = {jsonable(v)}")
