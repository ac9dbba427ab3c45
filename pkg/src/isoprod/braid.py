"""Braid (Hurwitz) moves and orbit partitions of spherical generating
systems.

The i-th elementary move replaces (h_i, h_{i+1}) by
(h_i h_{i+1} h_i^{-1}, h_i).  Moves preserve the product of the entries, the
generated subgroup and the multiset of orders, but may permute the order
*sequence*; an orbit is explored through all such tuples, while only those
matching the original order sequence count as members.  Seeding in
lexicographic order makes each orbit's representative its least member and
the orbit list deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, ResourceLimitError
from .groups import FiniteGroup
from .vectors import Vector

DEFAULT_ORBIT_CAP = 10_000_000


def hurwitz_move(G: FiniteGroup, vector: Vector, i: int) -> Vector:
    """Apply the i-th elementary braid move, 1 <= i <= r-1 (positions i and
    i+1 in 1-based terms)."""
    r = len(vector)
    if not 1 <= i <= r - 1:
        raise ValueError(f"move index {i} out of range 1..{r - 1}")
    a = vector[i - 1]
    b = vector[i]
    conj = G.mul(G.mul(a, b), G.inverses[a])
    return vector[:i - 1] + (conj, a) + vector[i + 1:]


def hurwitz_move_inverse(G: FiniteGroup, vector: Vector, i: int) -> Vector:
    """Inverse of :func:`hurwitz_move`: (h_i, h_{i+1}) -> (h_{i+1},
    h_{i+1}^{-1} h_i h_{i+1})."""
    r = len(vector)
    if not 1 <= i <= r - 1:
        raise ValueError(f"move index {i} out of range 1..{r - 1}")
    a = vector[i - 1]
    b = vector[i]
    conj = G.mul(G.mul(G.inverses[b], a), b)
    return vector[:i - 1] + (b, conj) + vector[i + 1:]


@dataclass(frozen=True)
class BraidOrbit:
    """One orbit: its members (all of the seed's order sequence) and the
    lexicographically least of them."""
    representative: Vector
    members: frozenset[Vector]

    @property
    def size(self) -> int:
        return len(self.members)


def orbit_partition(G: FiniteGroup, vectors: list[Vector], *,
                    orbit_cap: int = DEFAULT_ORBIT_CAP) -> list[BraidOrbit]:
    """Partition ``vectors`` (all of one signature) into braid orbits.

    Exploration walks the full orbit, including tuples whose order sequence
    differs from the input's; only tuples with the original order sequence
    are collected as members.  Orbits come back sorted by representative.
    """
    if not vectors:
        return []
    r = len(vectors[0])
    n = G.order
    table = G.multiplication_table()
    inverses = G.inverses
    bits = max(1, (n - 1).bit_length())
    shifts = [bits * i for i in range(r)]
    mask = (1 << bits) - 1

    def pack(v: Vector) -> int:
        acc = 0
        for i in range(r):
            acc |= v[i] << shifts[i]
        return acc

    remaining = {pack(v): v for v in vectors}
    if len(remaining) != len(vectors):
        raise ValueError("duplicate vectors in input")
    orbits: list[BraidOrbit] = []
    for seed in vectors:
        pseed = pack(seed)
        if pseed not in remaining:
            continue
        visited = {pseed}
        frontier = [pseed]
        members = []
        for cur in frontier:
            claimed = remaining.pop(cur, None)
            if claimed is not None:
                members.append(claimed)
            entries = [(cur >> s) & mask for s in shifts]
            for i in range(r - 1):
                a = entries[i]
                b = entries[i + 1]
                conj = table[table[a * n + b] * n + inverses[a]]
                nxt = cur ^ ((a ^ conj) << shifts[i]) ^ ((b ^ a) << shifts[i + 1])
                if nxt not in visited:
                    if len(visited) >= orbit_cap:
                        raise ResourceLimitError(
                            f"braid orbit exceeded cap {orbit_cap}")
                    visited.add(nxt)
                    frontier.append(nxt)
        if not members:
            raise ConsistencyError("orbit claimed no members")
        orbits.append(BraidOrbit(representative=seed,
                                 members=frozenset(members)))
    if remaining:
        raise ConsistencyError("vectors left unassigned after partitioning")
    return orbits
