# %% [markdown]
# # Finitely generated abelian groups
#
# Everything downstream is built on exact integer linear algebra.  A group is
# stored as a free rank plus its invariant factors, and kernels and cokernels
# of integer matrices come out of the Smith normal form.

# %%
from twistk.fgab import IntMatrix, cyclic, direct_sum, kernel_cokernel, smith_normal_form

A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
U, D, V = smith_normal_form(A)
print("D =", D.tolist())
print("U A V == D:", U @ A @ V == D, " det U =", U.det(), " det V =", V.det())

# %% [markdown]
# The cokernel of ``A`` (viewed as a map Z^3 -> Z^3) reads straight off the diagonal.

# %%
ker, coker = kernel_cokernel(A)
print("ker   =", ker)
print("coker =", coker)

# %% [markdown]
# Direct sums are normalised, so Z_4 + Z_6 and Z_2 + Z_12 are literally equal.

# %%
print(direct_sum([cyclic(4), cyclic(6)]))
print(direct_sum([cyclic(4), cyclic(6)]) == direct_sum([cyclic(2), cyclic(12)]))
