"""nabla, diagonal-harmonics multiplicities, and (q,t)-Catalan numbers.

The nabla operator is diagonal on Macdonald elements; pairing nabla(e_n)
against e_n gives the (q,t)-Catalan number, which the engine also
computes as a multi-factor structure coefficient and cross-checks.
"""

from fractions import Fraction

from qtsym import (
    Partition,
    e_elem,
    expand1,
    format_basis_expansion,
    nabla,
    qt_catalan,
)

for n in (1, 2, 3, 4):
    c = qt_catalan(n, 1)  # both routes compared internally
    at_one = c.num.eval_fraction({"q": Fraction(1), "t": Fraction(1)})
    print("C_%d(q,t) = %s   -> C_%d(1,1) = %s" % (n, c, n, at_one))

print("\nnabla(e_3) in the Schur basis (diagonal harmonics character):")
grad = nabla(e_elem(Partition((3,))))
print("  ", format_basis_expansion(expand1(grad, "schur"), "schur"))

print("\nhigher Catalan numbers at n = 2:")
for m in (1, 2, 3):
    print("  C_2^(%d) = %s" % (m, qt_catalan(2, m)))
