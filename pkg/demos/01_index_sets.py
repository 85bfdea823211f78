# # Totally odd index sets
#
# Every matrix in this package is indexed by the compositions of N into r
# odd parts, each at least 3. The table order is lexicographically
# decreasing, and all row/column positions refer to that order.

from totodd import count_S, enumerate_S, position_of

# In[1]:

table = enumerate_S(12, 2)
print(table.entries)
print(position_of(table, (5, 7)))

# Parity matters: r odd parts always add up to something with the parity
# of r, so S(21, 4) is empty while S(22, 4) is not.

# In[2]:

for N, r in [(9, 3), (10, 3), (15, 3), (21, 4), (22, 4)]:
    print(N, r, count_S(N, r))

# The table serializes to JSON so index order can be pinned alongside
# cached matrices.

# In[3]:

print(enumerate_S(15, 3).to_json()[:80], "...")
