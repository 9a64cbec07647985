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
# # Residues modulo small integers

# %%
from pseudofactorials.congruence import (
    alpha_mod,
    detect_period,
    figure3_text,
    modular_convergent,
    series_of_convergent,
)

print(figure3_text())

# %% [markdown]
# Periods seen over a horizon of 400 terms.  These are observations, not
# proofs of minimality.

# %%
for M in range(2, 21):
    s = detect_period(alpha_mod(M, 400))
    print(f"M={M:2d} preperiod={s.preperiod} period={s.period}")

# %% [markdown]
# ## Convergents modulo a_1 ... a_m
#
# The J-fraction has integer a_j, so each convergent agrees with the
# generating function modulo their product.

# %%
for m in (1, 3, 7):
    c = modular_convergent(m)
    N = 20
    same = series_of_convergent(c, N) == list(alpha_mod(c.modulus, N).values)
    print(m, c.modulus, same)

# %% [markdown]
# Reducing further modulo a prime p <= m gives short recurrences.

# %%
for p in (5, 7, 11, 13):
    c = modular_convergent(p, p)
    print(f"p={p:2d}  Q = {c.Q}")
