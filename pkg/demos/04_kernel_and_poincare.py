"""The Cauchy kernel and Poincare polynomials of quiver varieties.

Pairing test symmetric functions against the degree-n kernel at
(Z, W) = (0, v^2) produces Poincare polynomials of comet-shaped quiver
varieties; Weyl twists replace Schur factors by Adams-twisted complete
functions with a sign.
"""

from qtsym import (
    CometSpec,
    Partition,
    PunctureSpec,
    TwistSpec,
    kernel,
    poincare,
    poincare_point,
    specialize_kernel,
    twisted_poincare,
)

print("Degree-1 kernel on two alphabets, genus 0 and 1:")
for genus in (0, 1):
    K = kernel(1, genus, 2)
    for key, coeff in K.terms.items():
        print("  g=%d  %s : %s" % (genus, key, coeff))

print("\nFour regular semisimple punctures, rank 2, genus 0:")
spec = CometSpec(0, 2, (PunctureSpec.regular_semisimple(2),) * 4)
print("  Poincare polynomial:", poincare(spec))

print("\nTwist by a 2-cycle on the third puncture:")
twist = TwistSpec({2: {1: Partition((2,))}})
print("  twisted Poincare polynomial:", twisted_poincare(spec, twist))

print("\nRank 1 with g handles is affine space of dimension 2g:")
for g in (0, 1, 2):
    one = CometSpec(g, 1, (PunctureSpec.single_eigenvalue(Partition((1,))),))
    print("  g=%d: %s" % (g, poincare(one)))
