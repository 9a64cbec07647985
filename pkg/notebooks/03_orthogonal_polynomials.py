# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Orthogonal polynomials
#
# The reversed convergent denominators q_k are orthogonal for the functional
# <z^n> = alpha_n, and their exponential generating function is an explicit
# combination of cosh and sinh.

# %%
from fractions import Fraction

from pseudofactorials.orthopoly import (
    MomentFunctional,
    curve_param_check,
    inner_product,
    q_family,
    theorem5_bundle,
    verify_theorem5,
)

qs = q_family(6)
for k, q in enumerate(qs):
    print(f"q_{k} = {q}")

# %% [markdown]
# Gram matrix of q_0..q_6: diagonal, with entries a_1 a_2 ... a_n.

# %%
mf = MomentFunctional.pseudofactorial(13)
for p in qs:
    print(" ".join(f"{int(inner_product(p, q, mf)):>10d}" for q in qs))

# %% [markdown]
# ## Ingredients of the generating function

# %%
b = theorem5_bundle(10)
print("eta :", " ".join(map(str, b.eta.egf_values())))
print("chi :", " ".join(map(str, b.chi.egf_values())))
print("J   :", " ".join(map(str, b.bigJ.egf_values())))

# %% [markdown]
# eta lies on a rational cubic; the parametrisation is checked exactly.

# %%
print(curve_param_check([Fraction(k, 4) for k in range(-12, 13)]))

# %% [markdown]
# ## The identity itself
#
# Every t^k coefficient of eta cosh(zJ) + chi sinh(zJ), times k!, is compared
# with q_k as a polynomial in z.

# %%
report = verify_theorem5(25, 30)
print(report.passed)
for note in report.notes:
    print(note)
