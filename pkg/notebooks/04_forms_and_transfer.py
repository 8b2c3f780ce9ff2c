"""
Quadratic forms, hermitian forms and the transfer
=================================================

Complete invariants over Q, isotropy, trace forms of hermitian forms over
Q(sqrt d), and the transfer from an odd-degree field back to Q.
"""

# %%
from totaro.places import QuadraticField
from totaro.witt import (
    HermitianForm,
    QuadraticForm,
    SimpleExtension,
    diagonalize,
    hermitian_similar,
    invariants,
    is_isotropic,
    odd_degree_descent,
    projection_formula_check,
    trace_form,
    transfer,
    transfer_gram,
    transfer_stepwise,
    witt_equivalent,
)

# %%
print(diagonalize([[0, 1], [1, 0]]))
print(invariants(QuadraticForm((2, 2))) == invariants(QuadraticForm((1, 1))))
print(invariants(QuadraticForm((1, 1, 1, -7))))

# %% [markdown]
# <1,1,1,-7> is anisotropic: 7 n^2 is never a sum of three squares.
# <1,1,1,-3> is isotropic.

# %%
print(is_isotropic(QuadraticForm((1, 1, 1, -7))), is_isotropic(QuadraticForm((1, 1, 1, -3))))

# %%
K = QuadraticField(-1)
h = HermitianForm(K, (1, 1, 1))
print(trace_form(h))
print(hermitian_similar(h, HermitianForm(K, (1, 1, 2))))
print(hermitian_similar(h, HermitianForm(K, (1, 1, -1))))

# %% [markdown]
# Transfer along Q(2^(1/3)).

# %%
ext = SimpleExtension([-2, 0, 0, 1])
print([[str(x) for x in row] for row in transfer_gram(ext, ext.top.coerce(1))])
print(witt_equivalent(transfer(ext, [ext.lam]), QuadraticForm((2,))))
print(projection_formula_check(ext, QuadraticForm((1, 3)), ext.lam + 1))

# %%
tower = SimpleExtension([-2, 0, 0, 1], tower=[[-3, 0, 0, 1]])
mu = [tower.lam + tower.generator(1)]
print(tower.degree, witt_equivalent(transfer(tower, mu), transfer_stepwise(tower, mu)))

# %% [markdown]
# Similarity over an odd-degree extension descends to Q.

# %%
print(odd_degree_descent(h, h.scale(2), ext, ext.lam))
print(odd_degree_descent(h, HermitianForm(K, (1, 1, -1)), ext, ext.lam))
