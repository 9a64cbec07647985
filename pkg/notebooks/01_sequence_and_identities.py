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
# # The sequence and its generating function
#
# Pseudo-factorials start like factorials with alternating signs, but the
# recurrence mixes the earlier terms quadratically.

# %%
from pseudofactorials.pseudofact import (
    alpha_seq,
    check_identities,
    egf_f,
    g_series,
    sigma_series,
    sm_cm_series,
    verify_addition_formula,
)

alphas = alpha_seq(16)
for n, a in enumerate(alphas):
    print(f"{n:2d} {a:>16d}")

# %% [markdown]
# Signs come in blocks of two after the first term and the growth stays below
# n!.

# %%
import math

print("".join("+" if a > 0 else "-" for a in alpha_seq(40)))
print(max(abs(a) / math.factorial(n) for n, a in enumerate(alpha_seq(60))))

# %% [markdown]
# ## The EGF
#
# f(z) = sum alpha_n z^n / n!, as an exact truncated series.

# %%
f = egf_f(8)
print(f)

# %%
print("g     =", g_series(9))
print("sigma =", sigma_series(9))

# %% [markdown]
# ## Identities
#
# Each line below is a coefficientwise check to order 60; a failure would
# report the first bad coefficient.

# %%
report = check_identities(60)
for c in report.checks:
    print(f"{'ok ' if c.passed else 'BAD'} {c.name}")

# %% [markdown]
# The Dixonian pair is generated directly from its differential system.

# %%
sm, cm = sm_cm_series(13)
print("sm:", " ".join(map(str, sm.egf_values())))
print("cm:", " ".join(map(str, cm.egf_values())))

# %% [markdown]
# ## The addition formula
#
# Checked in cross-multiplied form as a bivariate series; perturbing a single
# alpha breaks it.

# %%
print(verify_addition_formula(20))
bad = alpha_seq(5)
bad[2] += 1
print(verify_addition_formula(4, bad))
