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
# # Elliptic functions, numerically
#
# f is a rescaled Dixonian sm and also a rational function of a Weierstrass
# function with invariants (0, -4).  Both connections are checked in double
# precision, and alpha_n is recovered from a hexagonal lattice sum.

# %%
import numpy as np

from pseudofactorials import numeric_elliptic as ne
from pseudofactorials.pseudofact import alpha_seq

k = ne.constants()
print(f"pi3 = {k.pi3:.15f} (quadrature {k.pi3_quadrature:.15f})")
print(f"r   = {k.r:.15f}, rho = {k.rho:.15f}")

# %% [markdown]
# ## Dixonian side

# %%
rep = ne.verify_dixon()
for z, d in zip(rep.samples, rep.deviations):
    print(f"z={z:+.1f}  deviation={d:.2e}")

# %% [markdown]
# ## Weierstrass side
#
# Values near the origin come from the Laurent series; further out the
# addition theorem glues smaller arguments together.

# %%
r = k.r
print(ne.wp_eval(3 * r), ne.wp_eval(2 * r))
rep = ne.verify_weierstrass()
print(rep.max_deviation)

# %%
rng = np.random.default_rng(0)
zs = rng.uniform(0.25, 1.5, 20) * np.exp(1j * rng.uniform(-np.pi, np.pi, 20))
res = [abs(dp * dp - 4 * p**3 - 4) for p, dp in map(ne.wp_eval, zs)]
print(f"largest residual of wp'^2 = 4 wp^3 + 4: {max(res):.1e}")

# %% [markdown]
# ## Lattice sums

# %%
exact = alpha_seq(21)
for n in range(2, 21, 3):
    s = ne.lattice_sum(n, 200)
    print(f"n={n:2d} sum={s.value:+.10e} exact={exact[n]:+d} rel.err={abs(s.value - exact[n]) / abs(exact[n]):.1e}")

# %% [markdown]
# The pole nearest the origin alone already predicts the signs and, for larger
# n, the size.

# %%
for n in (4, 10, 20, 30):
    print(n, ne.asymptotic_alpha(n) / ne.exact_alpha_float(n))
