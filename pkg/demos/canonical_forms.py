"""Exact similarity transforms used before building witnesses."""
import random

from mlimage import jordanize, to_bidiagonal, zero_diagonalize
from mlimage.randgen import random_quadratic_spectrum, random_split_spectrum

rng = random.Random(2)

d = random_split_spectrum(rng, 4)
j = jordanize(d)
print("D =", d.to_lists())
print("Jordan form =", j.T.to_lists())
canon, target = to_bidiagonal(j.T, "lower")
print("lower orientation diag/off:", [str(x) for x in target.diag], [str(x) for x in target.off])

q, m = random_quadratic_spectrum(rng, 3)
jq = jordanize(q)
print(f"\nmatrix with eigenvalues +-sqrt({m}) diagonalizes to", jq.T.to_lists())
print("P D P^-1 == T:", jq.P @ q @ jq.P_inv == jq.T)

z = zero_diagonalize(d)
print("\nzero-diagonal form:", z.T.to_lists())
