"""
Lengths, Bruhat order and admissible sets in GL_3
=================================================

"""

from __future__ import annotations

from iwahori import admissible_set, bruhat_leq, gl, translation
from iwahori.fixtures import omega_window
from iwahori.weyl import enumerate_up_to_length, reduced_word, simple_reflection_by_name, word_string

d = gl(3)

# Translations t_lam act on the base alcove; their length only depends on the
# dominant representative of lam.
for lam in [(1, 0, 0), (0, 0, 1), (2, 1, 0), (0, 1, 2)]:
    t = translation(d, lam)
    print(f"t{lam}: length {t.length}, reduced word {word_string(t)}")

# Every element factors as a reduced word in s0, s1, s2 followed by a
# length-zero element.
word, om = reduced_word(translation(d, (2, 1, 0)))
print("word:", [s.name for s in word], "then a length-zero part of translation", om.translation)

# Bruhat order is computed recursively. Elements in different components
# of the length-zero subgroup are never comparable.
s0 = simple_reflection_by_name(d, "s0")
t = translation(d, (1, 0, 0))
t2 = translation(d, (2, 0, -1))
print("t_(1,0,0) <= t_(2,0,-1)?", bruhat_leq(t, t2))
print("s0 <= t_(1,0,0)?", bruhat_leq(s0, t), "(different components)")

# Small balls of the group are streamed in length order.
counts: dict[int, int] = {}
for w in enumerate_up_to_length(d, 4, omega_window(d, 1)):
    counts[w.length] = counts.get(w.length, 0) + 1
print("elements per length:", counts)

# The admissible set of a minuscule coweight is small and Bruhat closed.
for mu in [(1, 0, 0), (1, 1, 0), (2, 1, 0)]:
    adm = admissible_set(d, mu)
    print(f"|Adm{mu}| = {len(adm)}")
