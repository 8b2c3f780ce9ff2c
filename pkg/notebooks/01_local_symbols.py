"""
Local symbols and splitting of primes
=====================================

Hilbert symbols at every place of Q, and how primes decompose in
quadratic and higher-degree fields.
"""

# %%
from fractions import Fraction

from totaro.places import (
    INF,
    IntegerPolynomial,
    QuadraticField,
    hilbert_symbol,
    local_degrees,
    place,
    relevant_places,
)

# %% [markdown]
# The symbol (a, b)_v is -1 exactly when z^2 = a x^2 + b y^2 has no
# nontrivial solution over Q_v.

# %%
for v in relevant_places(-1, -1):
    print(v, hilbert_symbol(-1, -1, v))

# %%
# rationals are fine, floats are not
print(hilbert_symbol(Fraction(3, 5), 7, place(5)), hilbert_symbol(2, 7, INF))

# %% [markdown]
# Reciprocity: the product over all places is +1.

# %%
a, b = Fraction(-14, 9), 33
print([(str(v), hilbert_symbol(a, b, v)) for v in relevant_places(a, b)])

# %%
K = QuadraticField(-1)
for p in (2, 3, 5, 7, 13):
    print(p, K.decomposition(p), K.local_degree(p))

# %% [markdown]
# Local degrees of a cubic field come from factoring mod p.

# %%
f = IntegerPolynomial([-1, 1, 0, 1])  # x^3 + x - 1, constant term first
for p in (2, 3, 5, 7, 11):
    print(p, local_degrees(f, p))
