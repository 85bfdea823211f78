# # e-coefficients two ways
#
# e(m; n) is the coefficient of x^(n-1) in the iterated Ihara product
# x1^(m1-1) o ... o xr^(mr-1). The expansion below is slow but obviously
# right; the closed formula is what the matrix builders use.

from totodd.polynomials import e_coefficient_expansion, e_coefficient_formula, ihara_circ, Polynomial
from totodd import build_E, rank

# In[1]:

x = Polynomial(1, {(2,): 1})
y = Polynomial(1, {(8,): 1})
print(ihara_circ(x, y))

# In[2]:

m = (5, 7)
for n in [(9, 3), (7, 5), (5, 7), (3, 9)]:
    print(n, e_coefficient_expansion(m, n), e_coefficient_formula(m, n))

# Putting them in a matrix over S(12, 2) gives E(12, 2). It has one
# dimensional kernel on each side.

# In[3]:

E = build_E(12, 2)
for row in E.entries:
    print(row)
print("rank", rank(E))
