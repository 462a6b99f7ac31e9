# %% [markdown]
# # Cohomology of odd sphere bundles
#
# An S^{2n-1}-bundle over a 2n-manifold M is determined (for our purposes) by
# its Euler number e.  The Gysin sequence gives the integral cohomology of the
# total space Z degree by degree.

# %%
from twistk.catalog import get_base
from twistk.graded import parity_parts
from twistk.gysin import BundleWithFlux, total_space_cohomology


def show(name, e):
    HZ = total_space_cohomology(BundleWithFlux(get_base(name), e=e))
    print(f"{name}, e={e}")
    for degree, group in HZ.nonzero().items():
        print(f"  H^{degree:<2} = {group}")
    even, odd = parity_parts(HZ)
    print(f"  even: {even}    odd: {odd}\n")


show("S6", 6)
show("S6", 0)
show("S2xS4", 4)

# %% [markdown]
# For n = 3 the Euler number must be even; odd values are refused.

# %%
from twistk.errors import InadmissibleEuler

try:
    BundleWithFlux(get_base("S6"), e=5)
except InadmissibleEuler as exc:
    print("refused:", exc)
