# %% [markdown]
# # The formal twisted Chern character
#
# Power-sum classes s_n, their transgressions w_n and a degree 2k+1 twist eta
# form a graded-commutative algebra with a differential d.  The even Chern
# series sum s_n/n! is closed under d - eps*eta for one sign eps, which we
# compute rather than assume.

# %%
from fractions import Fraction
from math import factorial

from twistk.chern import (ChernContext, chern_even, d_squared_check, differential,
                          odd_series_coefficients, special_tensor_coefficient, twisted_closure_sign)

for k in range(1, 5):
    ctx = ChernContext(k)
    print(f"k={k}, N={ctx.N}: d^2 = 0 is {d_squared_check(ctx)}, closing sign {twisted_closure_sign(ctx):+d}")

# %%
ctx = ChernContext(2, 14)
print("Ch    =", chern_even(ctx))
print("d Ch  =", differential(chern_even(ctx), ctx))

# %% [markdown]
# The odd series sum a_n w_n is closed for a_n = 1/n!, while the alternative
# weights lambda(n,k)/n! break the recursion at the first step.

# %%
eps = twisted_closure_sign(ctx)
series = odd_series_coefficients(ctx, eps, [Fraction(1, factorial(m)) for m in range(1, 3)])
print("a_n =", [str(a) for a in series.coefficients])
print("closes:", series.closes, "  lambda-weighted closes:", series.lambda_weighted_closes,
      " first failure at m =", series.first_failure)

# %% [markdown]
# Tensoring with a class whose only Chern class is c_k = v (v^2 = 0) shifts
# the power sums by a multiple of v s_{n-k}.

# %%
for k, n in [(1, 3), (2, 5), (3, 6)]:
    print(f"k={k}, n={n}: coefficient {special_tensor_coefficient(k, n)}")
