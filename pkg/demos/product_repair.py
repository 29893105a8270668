"""Products [A,B][A,C] + lam [A,C][A,B] of two commutators.

With [A,B] = diag(1, .., 1, -(n-1)) the diagonal equations can only be met when
the last diagonal entry of the target is zero.  Choosing [A,B] = diag(u) with
sum(u) = 0 and sum(d_i / u_i) = 0 removes the restriction, at the price of a
square root for some targets.
"""
from fractions import Fraction

from mlimage import witness as wt
from mlimage.canon import BidiagonalTarget
from mlimage.matrix import commutator

for d in [(1, -1, 0), (1, 1, -2), (3, -1, -2)]:
    d = tuple(map(Fraction, d))
    print(f"d = {tuple(map(str, d))}: fixed diagonal choice solvable? {wt.fixed_u_consistent(d, 0)}")

t = BidiagonalTarget("upper", tuple(map(Fraction, (1, 1, -2))), (Fraction(0), Fraction(0)))
sel = wt.select_u(t.diag, Fraction(0), off=t.off)
print("\nselected u:", [str(x) for x in sel.u], "radicand", sel.radicand)

for lam in (Fraction(0), Fraction(1), Fraction(5, 3)):
    a, b, c = wt.lemma2_construct(lam, t)
    ab, ac = commutator(a, b), commutator(a, c)
    print(f"lam = {lam}: product equals target: {ab @ ac + (ac @ ab).scale(lam) == t.to_matrix()}")
