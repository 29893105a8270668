"""Left-normed brackets reach any trace-zero matrix with rational witnesses.

Three slots hold S = diag(1..n) and the free slot holds X; the bracket then
collapses to -ad_S^3(X), which is inverted entrywise once D has been brought
to zero-diagonal form.
"""
import random

from mlimage import evaluate, poly, synthesize, zero_diagonalize
from mlimage.randgen import random_trace_zero

rng = random.Random(1)
f = poly("[[[x2,x1],x3],x4] - [x1,x3]*[x2,x4]")
d = random_trace_zero(rng, 4)
print("target D =", d.to_lists())

z = zero_diagonalize(d)
print("zero-diagonal form T =", z.T.to_lists())

report = synthesize(f, d)
print("branch:", report.branch)
print("all witnesses rational:", report.radicand is None)
print("f(X1..X4) == D:", evaluate(f, list(report.witnesses)) == d)
