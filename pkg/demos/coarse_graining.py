"""Coarse graining as a decomposition (quotient) topology.

Collapsing each block of a partition to a single point turns a topological
space into its decomposition space.  On finite spaces everything is
computable exactly, and two classical facts become machine-checkable:

* picking one representative point per block gives a subspace homeomorphic
  to the decomposition space (when the ambient space is Hausdorff), and
* the decomposition of a map's domain by its fibers is homeomorphic to the
  codomain (for continuous surjections onto Hausdorff codomains).

Run:  python demos/coarse_graining.py
"""

from itertools import product

from primchaos import (
    decomposition_topology,
    discrete_space,
    fiber_partition,
    finite_map,
    named_space,
    partition,
    verify_lemma7,
    verify_prop5,
)
from primchaos.fintop import all_partitions, space_document

# --- quotient of a chain ----------------------------------------------------

print("=== quotient of the 3-chain ===")
X = named_space("chain3")  # opens: {}, {a}, {a,b}, {a,b,c}
print("space:", space_document(X))

D = partition(X, [["a", "b"], ["c"]])
Q = decomposition_topology(X, D)
print("blocks ab|c collapse to:", space_document(Q))
print("(a two-point space with one nontrivial open set)")

# --- representative points --------------------------------------------------

print("=== representative subspaces (discrete ambient space) ===")
X4 = discrete_space("abcd")
D4 = partition(X4, [["a", "b"], ["c", "d"]])
for reps in (["a", "c"], ["b", "d"], ["a", "d"]):
    res = verify_prop5(X4, D4, reps)
    print(f"  reps {reps}: homeomorphic to the quotient -> {res.holds}")
print("the choice of representatives never matters:")
count = 0
for blocks in all_partitions("abcd"):
    D = partition(X4, [list(b) for b in blocks])
    for reps in product(*blocks):
        assert verify_prop5(X4, D, list(reps)).holds
        count += 1
print(f"  checked every representative choice for every partition: {count}")

# a non-Hausdorff ambient space still runs, but the hypothesis is flagged
res = verify_prop5(X, partition(X, [["a"], ["b", "c"]]), ["a", "b"])
print(f"non-Hausdorff ambient: holds={res.holds} ({res.detail})")

# --- fiber quotients --------------------------------------------------------

print("=== fiber quotients ===")
d4 = discrete_space("1234")
d2 = discrete_space("xy")
f = finite_map(d4, d2, {"1": "x", "2": "x", "3": "y", "4": "y"})
print("fibers of the pairing map:", fiber_partition(f).blocks)
res = verify_lemma7(f)
print(f"domain/fibers homeomorphic to codomain -> {res.holds}")

print("done: coarse graining computed exactly on finite substrates.")
