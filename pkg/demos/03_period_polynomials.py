# # Restricted even period polynomials
#
# W(N, 2) is cut out of the restricted even polynomials by a three term
# functional equation. Its coefficient vectors span exactly the left
# kernel of E(N, 2); the first example appears in weight 12.

from totodd import build_E, left_kernel
from totodd.linalg import vec_mat
from totodd.period import tasaka_image, w2_basis, w_basis

# In[1]:

(p,) = w2_basis(12).basis
print(p)
print(left_kernel(build_E(12, 2)).vectors)

# In[2]:

for N in range(12, 30, 2):
    print(N, w2_basis(N).dim, left_kernel(build_E(N, 2)).dim)

# In depth 3 the space is built from depth 2 pieces times a monomial in x3.
# Multiplying by F = E - 1 sends it into the left kernel of E(N, 3).

# In[3]:

W = w_basis(21, 3)
print("dim W(21, 3) =", W.dim)
for v in tasaka_image(21, 3):
    print(v[:6], "...", "annihilates E:", not any(vec_mat(v, build_E(21, 3))))
