"""
Changing the lattice and saving data as JSON
============================================

"""

from __future__ import annotations

import tempfile
from pathlib import Path

from iwahori import b_of_g_mu, gl, inner_twist, quotient_datum, sl, split_twist
from iwahori.errors import IncompatibleQuotient
from iwahori.io import dump, load

# GL_2 -> PGL_2 via (a, b) -> a - b.
pgl2, tw = quotient_datum(gl(2), None, [[1, -1]])
print(pgl2, "coroots:", pgl2.coroots)
print("B(PGL2, 1):", [p.to_json() for p in b_of_g_mu(tw, (1,))])
print("B(GL2, (1,0)):", [p.to_json() for p in b_of_g_mu(split_twist(gl(2)), (1, 0))])

# SL_2 -> PGL_2 doubles the cocharacter lattice.
_, tw = quotient_datum(sl(2), None, [[2]])
print("B(PGL2, 2) from SL2:", [p.to_json() for p in b_of_g_mu(tw, (2,))])

# A map that does not kill the centre is rejected.
try:
    quotient_datum(gl(2), None, [[1, 1]])
except IncompatibleQuotient as exc:
    print("rejected:", exc)

# Any (datum, twist) pair can be written out and read back.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "inner_gl2.json"
    dump(path, gl(2), inner_twist(gl(2)))
    print(path.read_text().strip())
    d, tw = load(path)
    print("reloaded:", d, "classes for (1,0):", len(b_of_g_mu(tw, (1, 0))))
