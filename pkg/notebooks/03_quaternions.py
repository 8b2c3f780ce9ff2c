"""
Quaternion algebras and unitary descent
=======================================

Arithmetic in (a, b)_Q, and the involution on Q0 (x) K that restricts to
conjugation on K.
"""

# %%
from totaro.places import QuadraticField
from totaro.quat import QuaternionAlgebra, albert_descent, conjugate, reduced_norm, splitting_quadratic

# %%
H = QuaternionAlgebra(-1, -1)
print(H.i * H.j == H.k, H.j * H.i == -H.k)
u = H.element(1, 1, 1, 1)
print(reduced_norm(u), [str(c) for c in (u * conjugate(u)).coords])

# %%
for a, b in [(-1, -1), (-1, 3), (2, 5), (1, 7)]:
    alg = QuaternionAlgebra(a, b)
    print((a, b), alg.brauer_class(), splitting_quadratic(alg))

# %% [markdown]
# The descent: q1 + q2 sqrt(d) goes to conj(q1) - conj(q2) sqrt(d).

# %%
R = albert_descent(H, QuadraticField(5))
x = R.element(H.i, H.j)
y = R.element(H.k, H.one)
print(R.sigma(R.sigma(x)) == x)
print(R.sigma(R.multiply(x, y)) == R.multiply(R.sigma(y), R.sigma(x)))
print(R.fixed_centre())
