"""
Apery-like numbers J2(n)
========================

Three independent ways to compute the same rational sequence.
"""

from aperylike import j2_by_3f2, j2_by_recurrence, j2_by_sum

# the binomial sum, term by term
for n in range(6):
    print(n, j2_by_sum(n))

# the three-term recurrence builds a whole prefix at once
seq = j2_by_recurrence(40)
print(seq.method, len(seq))

# the terminating 3F2(1/2, 1/2, -n; 1, 1; 1)
assert all(seq[n] == j2_by_sum(n) == j2_by_3f2(n) for n in range(41))

# denominators are powers of 2 only
print(all(d & (d - 1) == 0 for d in (seq[n].denominator for n in range(41))))
