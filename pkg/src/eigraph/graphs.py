"""Labeled simple graphs on vertices 1..n with exact bitset edge storage.

Edges live in a single integer bitset over the upper triangle, ordered by
column: (1,2), (1,3), (2,3), (1,4), (2,4), (3,4), ...  This is the same bit
order graph6 uses, so enumeration, encoding, and hashing all share one
canonical layout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EnumerationTooLarge, InvalidFamilyParams, InvalidVertex, SelfLoop

NAMED_KINDS = (
    "complete",
    "empty",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "two_cliques",
)

ENUMERATION_MAX_N = 7


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair {i,j}, 1 <= i < j, in column order."""
    return (j - 1) * (j - 2) // 2 + (i - 1)


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All unordered pairs on 1..n in bitset (column) order."""
    for j in range(2, n + 1):
        for i in range(1, j):
            yield i, j


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus an upper-triangle edge bitset."""

    n: int
    bits: int

    @property
    def m(self) -> int:
        """Number of edges."""
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        if i > j:
            i, j = j, i
        return bool((self.bits >> pair_index(i, j)) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (i, j) with i < j, in bitset order."""
        bits = self.bits
        for pair in all_pairs(self.n):
            if bits & 1:
                yield pair
            bits >>= 1
            if not bits:
                return

    def degrees(self) -> list[int]:
        """Degree of each vertex, index 0 holding vertex 1."""
        deg = [0] * self.n
        for i, j in self.edges():
            deg[i - 1] += 1
            deg[j - 1] += 1
        return deg


@dataclass(frozen=True)
class DegreeStats:
    """Degree sequence summary: per-vertex degrees, extremes, and edge count."""

    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    edge_count: int
    mean_degree: float


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical graph from (possibly unnormalized) vertex pairs.

    Pairs are normalized to i < j and duplicates collapse into one edge.
    Raises InvalidVertex for indices outside 1..n and SelfLoop for i == j.
    """
    if n < 1:
        raise InvalidFamilyParams(f"vertex count must be positive, got {n}")
    bits = 0
    for i, j in edges:
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i}")
        if not (1 <= i <= n) or not (1 <= j <= n):
            raise InvalidVertex(f"edge ({i},{j}) outside 1..{n}")
        if i > j:
            i, j = j, i
        bits |= 1 << pair_index(i, j)
    return Graph(n=n, bits=bits)


def complement(g: Graph) -> Graph:
    """Graph with an edge exactly where g has none."""
    full = (1 << (g.n * (g.n - 1) // 2)) - 1
    return Graph(n=g.n, bits=g.bits ^ full)


def degree_stats(g: Graph) -> DegreeStats:
    deg = g.degrees()
    return DegreeStats(
        degrees=tuple(deg),
        min_degree=min(deg),
        max_degree=max(deg),
        edge_count=g.m,
        mean_degree=2.0 * g.m / g.n,
    )


def irregularity(g: Graph) -> float:
    """Total deviation of the degree sequence from its mean.

    Returns sum over vertices of |d(u) - 2m/n|; zero exactly for regular
    graphs.  The mean is evaluated in double precision.
    """
    mean = 2.0 * g.m / g.n
    return float(sum(abs(d - mean) for d in g.degrees()))


# ---------------------------------------------------------------------------
# Deterministic generators
# ---------------------------------------------------------------------------

_U64 = (1 << 64) - 1
_TO_UNIT = 1.0 / (1 << 53)


class SplitMix64:
    """SplitMix64 pseudo-random generator (Steele, Lea & Flood 2014).

    A 64-bit state advances by the golden-ratio increment and each output is
    a mixed copy of the state, so identical seeds give identical streams on
    every platform.  Reference outputs for seed 42 are pinned in the test
    suite and listed in the README.
    """

    def __init__(self, seed: int):
        self.state = seed & _U64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _U64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
        return z ^ (z >> 31)

    def next_unit(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * _TO_UNIT


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) driven by a SplitMix64 stream.

    One draw per vertex pair, consumed in bitset order; the pair becomes an
    edge iff the draw is below p.  Identical (n, p, seed) give bit-identical
    graphs across runs and platforms.
    """
    if n < 1:
        raise InvalidFamilyParams(f"vertex count must be positive, got {n}")
    if not (0.0 <= p <= 1.0):
        raise InvalidFamilyParams(f"edge probability must be in [0,1], got {p}")
    rng = SplitMix64(seed)
    bits = 0
    for idx in range(n * (n - 1) // 2):
        if rng.next_unit() < p:
            bits |= 1 << idx
    return Graph(n=n, bits=bits)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    for f in range(3, math.isqrt(q) + 1, 2):
        if q % f == 0:
            return False
    return True


def gen_paley(q: int) -> Graph:
    """Paley graph on a prime q = 1 (mod 4).

    Vertices 1..q stand for residues 0..q-1; i ~ j iff (i - j) is a nonzero
    quadratic residue mod q.  The result is (q-1)/2-regular.
    """
    if not _is_prime(q) or q % 4 != 1:
        raise InvalidFamilyParams(f"Paley graph needs a prime q = 1 (mod 4), got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    bits = 0
    for i, j in all_pairs(q):
        if (j - i) % q in residues:
            bits |= 1 << pair_index(i, j)
    return Graph(n=q, bits=bits)


def gen_named(kind: str, n: int, part: int | None = None) -> Graph:
    """Deterministic labeled graph from a named family.

    two_cliques splits 1..n into cliques {1..a} and {a+1..n};
    complete_bipartite puts all edges between those two parts.  Both default
    to a = n/2 and then require even n; an explicit part size overrides.
    """
    if kind not in NAMED_KINDS:
        raise InvalidFamilyParams(f"unknown family kind {kind!r}")
    if n < 1:
        raise InvalidFamilyParams(f"vertex count must be positive, got {n}")

    if kind == "complete":
        return complement(Graph(n=n, bits=0))
    if kind == "empty":
        return Graph(n=n, bits=0)
    if kind == "path":
        return build_graph(n, [(i, i + 1) for i in range(1, n)])
    if kind == "cycle":
        if n < 3:
            raise InvalidFamilyParams(f"cycle needs n >= 3, got {n}")
        return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])
    if kind == "star":
        return build_graph(n, [(1, j) for j in range(2, n + 1)])

    if part is None:
        if n % 2 != 0:
            raise InvalidFamilyParams(f"{kind} needs even n or an explicit part size, got n={n}")
        part = n // 2
    if not (1 <= part <= n - 1):
        raise InvalidFamilyParams(f"part size {part} outside 1..{n - 1}")

    if kind == "two_cliques":
        edges = [(i, j) for i in range(1, part + 1) for j in range(i + 1, part + 1)]
        edges += [(i, j) for i in range(part + 1, n + 1) for j in range(i + 1, n + 1)]
        return build_graph(n, edges)
    # complete_bipartite
    edges = [(i, j) for i in range(1, part + 1) for j in range(part + 1, n + 1)]
    return build_graph(n, edges)


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in bitmask order.

    Mask bit k is pair k of the canonical order, so masks count up exactly
    as graph6 bit strings do.  Capped at n = 7 (2^21 graphs).
    """
    if n < 1:
        raise InvalidFamilyParams(f"vertex count must be positive, got {n}")
    if n > ENUMERATION_MAX_N:
        raise EnumerationTooLarge(f"n={n} would enumerate 2^{n * (n - 1) // 2} graphs (max n={ENUMERATION_MAX_N})")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph(n=n, bits=mask)
