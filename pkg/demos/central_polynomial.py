"""Why n >= 3 matters.

On 2x2 matrices [x1,x2][x3,x4] + [x3,x4][x1,x2] only takes scalar values, so
no traceless non-scalar target is reachable.  From n = 3 on the same
polynomial hits every trace-zero matrix.
"""
import random

from mlimage import Matrix, evaluate, poly, synthesize
from mlimage.randgen import random_matrix

f = poly("[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2]")
rng = random.Random(0)

print("values on 2x2 matrices:")
for _ in range(3):
    v = evaluate(f, [random_matrix(rng, 2) for _ in range(4)])
    print("  ", v.to_lists())

# n = 3: a trace-zero diagonal target
d = Matrix.diag([1, -1, 0])
report = synthesize(f, d)
print("\nn = 3 target", d.to_lists())
print("branch:", " -> ".join(report.branch))
print("radicand:", report.radicand)
print("verified:", report.verified)
for k, w in enumerate(report.witnesses, start=1):
    print(f"X{k} =", w.to_lists())
