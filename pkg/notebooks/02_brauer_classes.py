"""
Brauer classes by local invariants
==================================

Classes over Q and over a quadratic field K, their Schur index,
restriction, corestriction and splitting fields.
"""

# %%
from fractions import Fraction

from totaro.brauer import (
    BrauerClassK,
    BrauerClassQ,
    admits_unitary_involution,
    corestrict,
    find_quaternion_symbol,
    quaternion_class,
    restrict_to_quadratic,
    schur_index,
    search_splitting_polynomial,
    splits_over,
    tensor,
)
from totaro.places import IntegerPolynomial, QuadraticField

# %%
alpha = quaternion_class(-1, -1)
print(alpha, schur_index(alpha))
print(tensor(alpha, quaternion_class(-1, 3)))

# %% [markdown]
# Restriction to Q(i) kills the invariants at 2 and at infinity.

# %%
K = QuadraticField(-1)
print(restrict_to_quadratic(alpha, K).is_zero())
print(restrict_to_quadratic(quaternion_class(2, 5), K))

# %% [markdown]
# A degree-3 class over K: invariants 1/3 and 2/3 at the two places above 5.
# Its corestriction vanishes, so it carries a unitary involution.

# %%
D = BrauerClassK(K, {(5, 1): Fraction(1, 3), (5, 2): Fraction(2, 3)})
print(schur_index(D), corestrict(D), admits_unitary_involution(D))

# %%
f0 = search_splitting_polynomial(D, 3)
print(f0, f0.factor_degrees_mod(5), splits_over(D, f0))
print(splits_over(D, IntegerPolynomial([1, 0, 1])))

# %% [markdown]
# Smallest quaternion symbol with a given class.

# %%
for cls in (BrauerClassQ(), alpha, BrauerClassQ({3: Fraction(1, 2), "inf": Fraction(1, 2)})):
    print(cls, find_quaternion_symbol(cls))
