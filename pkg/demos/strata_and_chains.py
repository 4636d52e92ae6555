"""
The very special strata poset and chains of coweights
=====================================================

"""

from __future__ import annotations

from iwahori import curve_chain, gl, kr_poset_very_special, restriction_of_scalars, sp4, split_twist

# Strata for a very special level are indexed by dominant lam below mu.
poset = kr_poset_very_special(split_twist(gl(3)), (2, 1, 0))
print("GL3 nodes:", poset.nodes)
print("GL3 covers:", poset.edges)

poset = kr_poset_very_special(split_twist(sp4()), (2, 0))
print("Sp4 nodes:", poset.nodes)

# Graphviz output, ready for `dot -Tpng`.
print(poset.to_dot())

# Chains climb one coroot at a time from lam to mu.
print(curve_chain(split_twist(gl(3)), (1, 1, 1), (3, 0, 0)))

# Over a degree two extension the step adds the whole Frobenius orbit of the coroot.
_, tw = restriction_of_scalars(gl(2), None, 2)
print(curve_chain(tw, (1, 1, 1, 1), (2, 0, 2, 0)))
