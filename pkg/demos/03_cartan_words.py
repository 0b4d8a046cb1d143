"""
Admissible words and Cartan's indices
=====================================

Stable words of a given length correspond to index sequences satisfying an
excess bound; the correspondence is a bijection in both directions.
"""

# %%
from taqlab import enumerate_stable_words, sequence_to_word, word_to_sequence

p = 3
for w, deg, kind in enumerate_stable_words(p, 5, 40):
    s = word_to_sequence(w, p)
    back = sequence_to_word(s, p, len(w))
    print(f"{deg:3d}  {w.render():32s} {str(s.entries):10s} {kind.value:14s} {back == w}")

# %%
# the expanded alphabet separates the gamma_p letters hidden in rho^k and phi^k
from taqlab import Word, expand_word

w = Word.parse("phi^1 sigma rho^2 sigma mu")
print([x.value for x in expand_word(w).letters])
