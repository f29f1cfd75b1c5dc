"""The product algebra spanned by Kostka polynomials.

Structure coefficients in the Schur basis come from the Kostka matrix
and its inverse; s_(n) is the identity element, and the coefficients are
(observably) integer polynomials in q and t.
"""

from qtsym import (
    Partition,
    expand1,
    format_basis_expansion,
    kostka_product,
    partitions_of,
    s_elem,
    structure_coefficient,
)

mu = Partition((2, 2))
nu = Partition((2, 1, 1))

print("s%s # s%s =" % (mu, nu))
product = kostka_product(s_elem(mu), s_elem(nu))
print("  ", format_basis_expansion(expand1(product, "schur"), "schur"))

print("\nTwo published coefficients:")
for target in (Partition((2, 1, 1)), Partition((1, 1, 1, 1))):
    c = structure_coefficient([mu, nu], target)
    print("  c^%s = %s" % (target, c))

print("\ns[4] is the identity:")
for lam in partitions_of(4):
    assert kostka_product(s_elem(Partition((4,))), s_elem(lam)) == s_elem(lam)
print("  s[4] # s_lam = s_lam for every lam of 4")

print("\nEvery coefficient at n = 4 is an integer polynomial:")
ok = True
for a in partitions_of(4):
    for b in partitions_of(4):
        for c in partitions_of(4):
            val = structure_coefficient([a, b], c)
            ok = ok and val.is_polynomial()
print("  all polynomial:", ok)
