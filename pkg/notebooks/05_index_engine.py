"""
Index of torsors
================

The three cases: split etale algebra, quaternion descents over K, and
odd degree over K, each with a constructed and verified field.
"""

# %%
import json
from fractions import Fraction

from totaro.brauer import BrauerClassK, BrauerClassQ, quaternion_class
from totaro.engine import TorsorSpec, run_totaro, swap_check
from totaro.places import QuadraticField
from totaro.quat import QuaternionAlgebra
from totaro.witt import HermitianForm


def show(report):
    d = report.as_dict()
    print(json.dumps({k: d[k] for k in ("case", "index", "theta", "field")}))
    print("all checks pass:", all(c.passed for c in report.verification))


# %%
show(run_totaro(TorsorSpec("split-etale", C=quaternion_class(-1, -1), B=BrauerClassQ())))
show(run_totaro(TorsorSpec("split-etale", C=BrauerClassQ({5: Fraction(1, 3), 7: Fraction(2, 3)}), B=BrauerClassQ())))

# %%
A0, B0 = QuaternionAlgebra(-1, -1), QuaternionAlgebra(-1, 3)
for d in (5, -7, 2):
    show(run_totaro(TorsorSpec("quaternion", A0=A0, B0=B0, K=QuadraticField(d))))

# %% [markdown]
# Odd degree with D split: the hermitian forms decide theta.

# %%
K = QuadraticField(-1)
h = HermitianForm(K, (1, 1, 1))
show(run_totaro(TorsorSpec("odd-degree", D=BrauerClassK(K), degree=3, h=h, h_prime=HermitianForm(K, (1, 1, 2)))))
show(run_totaro(TorsorSpec("odd-degree", D=BrauerClassK(K), degree=3, h=h, h_prime=HermitianForm(K, (1, 1, -1)))))
print(swap_check(h).as_dict()["blocks"][0])

# %% [markdown]
# D not split: theta stays undetermined and both candidate fields are reported.

# %%
D = BrauerClassK(K, {(5, 1): Fraction(1, 3), (5, 2): Fraction(2, 3)})
r = run_totaro(TorsorSpec("odd-degree", D=D))
print(r.as_dict()["theta"], r.as_dict()["index_candidates"])
for c in r.candidates:
    print(c.as_dict())
