"""Exact rank and crank statistics.

The rank of a partition is its largest part minus its number of parts;
N(m, n) counts partitions of n with rank m.  This script builds the tables
two independent ways (brute-force enumeration vs generating-function
coefficient extraction), checks that they agree, and shows the classical
equidistribution of rank classes behind the congruences p(5k+4) = 0 (mod 5)
and p(7k+5) = 0 (mod 7).
"""

from rankasym import exact

table_enum = exact.rank_table(30, method="enumeration")
table_series = exact.rank_table(30, method="series")
agree = all(table_enum.row(n) == table_series.row(n) for n in range(31))
print(f"enumeration vs series rank tables on n <= 30: agree = {agree}")

n = 20
row = table_series.row(n)
print(f"\nN(m, {n}) for small m (p({n}) = {exact.partition_count(n)}):")
for m in range(-4, 5):
    print(f"  m = {m:+d}: {row.get(m, 0)}")
print(f"  row sum = {sum(row.values())}")
print(f"  symmetric in m: {all(row.get(-m, 0) == c for m, c in row.items())}")

print("\nRank classes mod 5 at n = 5k + 4 (all equal => 5 | p(n)):")
for n in (4, 9, 24, 49):
    sizes = exact.dyson_class_sizes(n, 5)
    print(f"  n = {n}: {sorted(sizes.values())}")

print("\nRank classes mod 7 at n = 7k + 5 (all equal => 7 | p(n)):")
for n in (5, 12, 47):
    sizes = exact.dyson_class_sizes(n, 7)
    print(f"  n = {n}: {sorted(sizes.values())}")

print("\nCrank row sums also reproduce p(n):")
crank = exact.crank_table(25)
print("  ok =", all(crank.row_sum(n) == exact.partition_count(n)
                    for n in range(26)))
