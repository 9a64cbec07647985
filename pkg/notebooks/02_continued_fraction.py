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
# # The Jacobi continued fraction
#
# Three independent routes to the J-fraction of sum alpha_n z^n:
# the addition decomposition of the EGF, peeling the ordinary generating
# function, and the closed form for c_j and a_j.

# %%
import math

from pseudofactorials.cf_engine import (
    convergents,
    hankel,
    hankel_closed_form,
    jfraction_from_ogf,
    jfraction_from_sr,
    pseudofactorial_jfraction,
    secant_egf,
    sr_decompose,
)
from pseudofactorials.pseudofact import alpha_seq, egf_f

# %% [markdown]
# ## Warm-up: the secant
#
# sec(x + y) decomposes with weights (k!)^2, which makes a_j = j^2.

# %%
sec = sr_decompose(secant_egf(24), 8)
print([int(w) for w in sec.omegas])
print(jfraction_from_sr(sec).a)

# %% [markdown]
# ## Pseudo-factorials

# %%
depth = 12
via_sr = jfraction_from_sr(sr_decompose(egf_f(2 * depth + 2), depth))
via_ogf = jfraction_from_ogf(alpha_seq(2 * depth + 1), depth)
closed = pseudofactorial_jfraction(depth)

print(f"{'j':>3} {'c_j':>5} {'a_(j+1)':>8}")
for j in range(depth):
    print(f"{j:>3} {int(closed.c[j]):>5} {int(closed.a[j]):>8}")
print(via_sr == via_ogf == closed)

# %% [markdown]
# The weights omega_l themselves: 3^n (2n)!^2 at even levels and
# -3^(n+1) (2n+1)!^2 at odd ones.

# %%
print([int(w) for w in sr_decompose(egf_f(20), 6).omegas])

# %% [markdown]
# ## Convergents

# %%
for k in range(1, 5):
    pair = convergents(closed, k)
    print(f"P_{k} = {pair.P}    Q_{k} = {pair.Q}")

# %% [markdown]
# ## Hankel determinants
#
# det(alpha_{i+j}) equals the product of the a_j^(m-j), which has a closed
# form in superfactorials.

# %%
alphas = alpha_seq(24)
for m in range(1, 9):
    print(m, hankel(alphas, m), hankel(alphas, m) == hankel_closed_form(m))
