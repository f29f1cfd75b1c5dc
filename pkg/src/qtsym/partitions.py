"""Partitions, Young-diagram cell statistics, dominance order, enumeration.

Cells are indexed (row i, column j) starting at 1. Enumeration order is
reverse lexicographic and fixed, so table rows and cache files are stable
across runs.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


class Partition(tuple):
    """Weakly decreasing positive integers; the empty tuple is the partition of 0.

    Zero parts are dropped on construction, anything else invalid raises.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts if x != 0)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be positive: %r" % (parts,))
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        if not self:
            return Partition()
        out = [0] * self[0]
        for part in self:
            for j in range(part):
                out[j] += 1
        return Partition(out)

    def cells(self):
        """Iterate cells (i, j), 1-based, row by row."""
        for i, part in enumerate(self, start=1):
            for j in range(1, part + 1):
                yield (i, j)

    def arm(self, i, j):
        """Boxes strictly to the right of cell (i, j)."""
        self._check_cell(i, j)
        return self[i - 1] - j

    def leg(self, i, j):
        """Boxes strictly below cell (i, j)."""
        self._check_cell(i, j)
        return sum(1 for part in self[i:] if part >= j)

    def _check_cell(self, i, j):
        if not (1 <= i <= len(self) and 1 <= j <= self[i - 1]):
            raise ValueError("cell (%d, %d) outside diagram of %s" % (i, j, list(self)))

    def hook(self, i, j):
        return self.arm(i, j) + self.leg(i, j) + 1

    def z(self):
        """Order of the centralizer of a permutation with this cycle type."""
        out = 1
        mult = {}
        for part in self:
            mult[part] = mult.get(part, 0) + 1
        for part, m in mult.items():
            out *= part**m * factorial(m)
        return out

    def nstat(self):
        """n(lambda) = sum over rows of (i - 1) * lambda_i."""
        return sum(i * part for i, part in enumerate(self))

    def sign(self):
        """Sign of a permutation with this cycle type."""
        return -1 if (self.size - len(self)) % 2 else 1

    def multiplicities(self):
        """dict part -> multiplicity."""
        out = {}
        for part in self:
            out[part] = out.get(part, 0) + 1
        return out

    def __repr__(self):
        return "Partition(%s)" % (list(self),)

    def __str__(self):
        return "[%s]" % ",".join(str(x) for x in self)


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n in reverse lexicographic order, as a tuple."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, maxpart), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n if n else 1, ())
    if n == 0:
        return (Partition(),)
    return tuple(out)


def dominance_leq(lam, mu):
    """True iff |lam| = |mu| and partial sums of lam never exceed those of mu."""
    if sum(lam) != sum(mu):
        return False
    total_l = 0
    total_m = 0
    for k in range(max(len(lam), len(mu))):
        total_l += lam[k] if k < len(lam) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l > total_m:
            return False
    return True


def parse_partition(text):
    """Parse '[3,1,1]' (or '3,1,1') into a Partition."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return Partition()
    try:
        parts = [int(x) for x in s.split(",")]
    except ValueError as exc:
        raise ValueError("bad partition text %r" % text) from exc
    return Partition(parts)
