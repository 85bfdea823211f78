# # Ranks of C(N, r) against the generating series
#
# C(N, r) chains E^(2) ... E^(r-1) E. Its exact rank is compared with the
# y^r coefficient of 1 / (1 - O y + S y^2).

from totodd.series import compare_rank_to_conjecture
from totodd.cli import format_table

# In[1]:

rows, records = compare_rank_to_conjecture(21, 4)
print(format_table([row for row in rows if row[2]], "text"))

# Every comparison is stored as a record; a mismatch would be a finding,
# not an error.

# In[2]:

from collections import Counter
print(Counter((rec.check, rec.status) for rec in records))
