"""Tour of the exact quaternion/octonion arithmetic.

Run:  python demos/01_hypercomplex_algebra.py
"""

from fractions import Fraction

from qszego import Hypercomplex, associator, mult_table

e = lambda dim, i: Hypercomplex.basis(dim, i)

print("quaternion products generated from the single cycle (1,2,3):")
for i, j in ((1, 2), (2, 3), (3, 1), (2, 1)):
    print(f"  e{i} e{j} = {(e(4, i) * e(4, j)).to_text()}")

print("\noctonion products from the seven oriented triples:")
for i, j in ((2, 5), (1, 4), (3, 6), (5, 2)):
    print(f"  e{i} e{j} = {(e(8, i) * e(8, j)).to_text()}")

print("\nthe associator measures the failure of associativity:")
a = associator(e(8, 1), e(8, 2), e(8, 4))
print(f"  [e1, e2, e4] = {a.to_text()}   (nonzero: octonions are not associative)")
print(f"  [e1, e2, e3] = {associator(e(8, 1), e(8, 2), e(8, 3)).to_text()}"
      "   (zero: they are alternative and (1,2,3) spans a quaternion subalgebra)")

print("\nexact rational arithmetic is the default:")
x = Hypercomplex((Fraction(3, 2), -2, 0, Fraction(1, 3)))
y = Hypercomplex((1, 1, 1, 1))
print(f"  x          = {x.to_text()}")
print(f"  |x|^2      = {x.norm_sq()}")
print(f"  x y        = {(x * y).to_text()}")
print(f"  |xy|^2     = {(x * y).norm_sq()}  equals |x|^2 |y|^2 = {x.norm_sq() * y.norm_sq()}")
print(f"  x^-1       = {x.inverse().to_text()}")
print(f"  x x^-1     = {(x * x.inverse()).to_text()}")

print("\nthe multiplication table itself is generated, never typed:")
table = mult_table(8)
row = " ".join(f"{'-' if s < 0 else '+'}e{k}" for k, s in table[3])
print(f"  row of e3:  {row}")
