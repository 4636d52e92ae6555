"""
Checking loop-group memberships over small finite fields
========================================================

Field elements are stored as integers whose base-p digits are the
coefficients in a fixed polynomial basis, so over GF(9) the integer 5 is
2 + 1*X.
"""

from __future__ import annotations

from iwahori.errors import ConstraintViolated
from iwahori.loops.cases import case3_literal_prefix, check_case, model_for, translation_lift, verify_cases
from iwahori.loops.field import GF

F = GF(9)
print(F, "modulus tail", F.modulus, "  3 * 4 =", F.mul(3, 4), "  1/5 =", F.inv(5))

# The translation lifts found by search, one per setting.
for case in (1, 2, 3):
    model = model_for(case, 5)
    kind = {1: "sl2_standard", 2: "su3_standard", 3: "su3_nonstandard"}[case]
    print(f"case {case} lift over {model.kind} model:", translation_lift(kind, model).to_json())

# A single witness: it should be integral.
ok, k = check_case(1, 5, 2)
print("case 1, q = 5, x = 2:", ok, k.to_json())

# Full sweeps over F_q^x.
for case, q, unr in [(1, 7, False), (2, 5, False), (2, 3, True), (3, 7, False)]:
    rep = verify_cases(case, q, unr)
    print(f"case {case}, q = {q}, unramified = {unr}: {rep['checked']} values, all pass = {rep['all_pass']}")

# The prefix u_1(2/x, 2/x^2) is not even a group element: the unitary constraint fails.
try:
    case3_literal_prefix(model_for(3, 5), 1)
except ConstraintViolated as exc:
    print("u_1(2/x, 2/x^2):", exc)
