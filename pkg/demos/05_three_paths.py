"""Three independent routes to the column coefficients c^{1^n}_{mu,nu}.

The Kostka-matrix route is the definition; the logarithmic-kernel route
goes through the genus-zero Cauchy series on four alphabets; the trace
route evaluates the kernel at (0, sqrt t) and recovers the q = 0
specialization. They must agree exactly, and the mixed-Hodge route
(still conjectural as geometry) reproduces the same polynomials.
"""

from qtsym import (
    Partition,
    c_from_log,
    c_from_trace,
    mixed_hodge_rhs,
    partitions_of,
    q1_rhs,
    rf,
    structure_coefficient,
)

n = 3
ones = Partition((1,) * n)
print("n = %d" % n)
for mu in partitions_of(n):
    for nu in partitions_of(n):
        exact = structure_coefficient([mu, nu], ones)
        log_route = c_from_log([mu, nu])
        trace_route = c_from_trace(mu, nu)
        hodge_route = mixed_hodge_rhs(mu, nu)
        q1_route = q1_rhs(mu, nu)
        assert log_route == exact
        assert rf(trace_route) == exact.specialize({"q": rf(0)})
        assert hodge_route == exact
        assert q1_route == exact.specialize({"q": rf(1)})
        print("  mu=%s nu=%s:  c = %s" % (mu, nu, exact))
        print("      q=0 trace: %s   q=1: %s" % (trace_route, q1_route))
print("all routes agree")
