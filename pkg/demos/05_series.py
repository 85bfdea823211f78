# # Generating series
#
# Truncated integer series are enough for every identity used here.

from totodd.series import (
    conjectured_rank_series, recursion_B, recursion_T, series_O, series_S, verify_series_identity,
)

# In[1]:

bound = 30
O, S = series_O(bound), series_S(bound)
print("O", O.coeffs)
print("S", S.coeffs)

# The kernel series T_r from the recursion, and O^r - T_r, which should be
# the conjectured rank series.

# In[2]:

for r in range(2, 6):
    T = recursion_T(r, bound)
    print(r, T.coeffs[-8:], (O ** r - T) == conjectured_rank_series(r, bound))

# In[3]:

print(recursion_B(4, bound).coeffs)
print(verify_series_identity(35, 6).status)
