"""
Newton points and the set B(G, {mu})
====================================

"""

from __future__ import annotations

from iwahori import (
    b_of_g_mu,
    gl,
    gsp4,
    inner_twist,
    mu_ordinary,
    newton_point,
    split_twist,
    translation,
    unitary_twist,
)
from iwahori.weyl import simple_reflection_by_name


def show(label, twist, mu):
    pts = b_of_g_mu(twist, mu)
    print(f"{label}, mu = {mu}: {len(pts)} class{'es' if len(pts) != 1 else ''}")
    for p in pts:
        print("   newton", [str(x) for x in p.newton], "kappa", list(p.kappa))
    mo = mu_ordinary(twist, mu)
    print("   mu-ordinary:", None if mo is None else [str(x) for x in mo.newton])


# Split GL_2 with the minuscule coweight: the ordinary and the supersingular class.
show("split GL2", split_twist(gl(2)), (1, 0))

# A non-quasi-split inner form has no mu-ordinary class.
show("inner GL2", inner_twist(gl(2)), (1, 0))

# The quasi-split unitary twist averages mu over its Frobenius orbit.
show("unitary GL3", unitary_twist(gl(3)), (1, 0, 0))

# GSp_4 with the Siegel coweight: ordinary, almost ordinary, supersingular.
show("GSp4", split_twist(gsp4()), (1, 1, 1))

# Newton points of individual elements. A simple reflection has the trivial Newton point.
d = gl(2)
tw = split_twist(d)
print("nu(t_(2,1)) =", newton_point(tw, translation(d, (2, 1))))
print("nu(s1) =", newton_point(tw, simple_reflection_by_name(d, "s1")))
