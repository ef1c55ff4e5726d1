"""Partition combinatorics: enumeration and diagram statistics.

Partitions of d index the TQFT basis everywhere; the fixed enumeration
order (reverse-lexicographic, so (d) first and (1^d) last) is part of the
external contract since all matrices and cache files use it.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


class Partition:
    """Weakly decreasing positive parts; immutable, hashable, ordered."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts):
        parts = tuple(sorted(parts, reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        self.parts = parts
        self._hash = hash(parts)

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def mult(self, i):
        """Number of parts equal to i."""
        return self.parts.count(i)

    def multiplicities(self):
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def conjugate(self):
        if not self.parts:
            return Partition(())
        w = self.parts[0]
        conj = [0] * w
        for p in self.parts:
            for j in range(p):
                conj[j] += 1
        return Partition(conj)

    def hooks(self):
        """Multiset (sorted list) of hook lengths of the Ferrers diagram."""
        conj = self.conjugate().parts
        out = []
        for i, p in enumerate(self.parts):
            for j in range(p):
                out.append(p + conj[j] - i - j - 1)
        return sorted(out)

    def n_stat(self):
        """n(lambda) = sum (i-1)*lambda_i."""
        return sum(i * p for i, p in enumerate(self.parts))

    def total_content(self):
        """Sum of (column - row) over diagram cells."""
        return sum(sum(j - i for j in range(p)) for i, p in enumerate(self.parts))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.parts < other.parts

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


@lru_cache(maxsize=None)
def all_partitions(d):
    """All partitions of d in reverse-lexicographic order ((d) first)."""
    if d < 1:
        raise ValueError("degree must be a positive integer")

    def gen(total, maxpart):
        if total == 0:
            yield ()
            return
        for first in range(min(total, maxpart), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(d, d))


def zed(lam):
    """Centralizer order prod m_i! * i^m_i of the conjugacy class lam."""
    out = 1
    for i, m in lam.multiplicities().items():
        out *= factorial(m) * i ** m
    return out


def stats(lam):
    """Conjugate, total content, hook multiset, and n(lambda)."""
    return {
        "conjugate": lam.conjugate(),
        "total_content": lam.total_content(),
        "hooks": lam.hooks(),
        "n_lambda": lam.n_stat(),
    }


def parse_partition(text):
    """Parse the CLI syntax '2,1,1' into a Partition."""
    parts = [int(p) for p in text.strip().split(",") if p.strip()]
    if not parts:
        raise ValueError(f"empty partition in {text!r}")
    return Partition(parts)


def parse_partition_list(text):
    """Parse ';'-separated partitions, e.g. '2;1,1'."""
    chunks = [c for c in text.strip().split(";") if c.strip()]
    return [parse_partition(c) for c in chunks]
