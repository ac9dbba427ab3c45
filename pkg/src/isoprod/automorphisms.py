"""Automorphism groups of materialized finite groups.

An automorphism is stored as a tuple ``phi`` of length |G| with ``phi[e]``
the image of element id ``e``.  The search fixes a short generating sequence
(greedily chosen to grow the closure fastest), backtracks over images
constrained to elements of equal order and equal conjugacy-class size, prunes
with pairwise product orders, extends each surviving assignment to all of G
through the closure's factorization words, and only keeps maps that are
bijective and multiplicative on *all* pairs (checked as one vectorized table
comparison).

The full automorphism group is used downstream even though inner
automorphisms are redundant there; at the group orders this package targets
the redundancy is cheap and avoids computing outer coset representatives.
"""

from __future__ import annotations

import numpy as np

from .errors import ConsistencyError, ResourceLimitError
from .groups import FiniteGroup

DEFAULT_AUT_CAP = 1024
FULL_CLOSURE_CHECK_LIMIT = 2000   # pairwise closure check up to this many maps

Automorphism = tuple[int, ...]


def generating_sequence(G: FiniteGroup) -> list[int]:
    """Short generating sequence: repeatedly add the element whose addition
    grows the generated subgroup the most (smallest id on ties)."""
    chosen: list[int] = []
    current: frozenset[int] = frozenset([0])
    while len(current) < G.order:
        best = None
        best_size = -1
        for e in range(1, G.order):
            if e in current:
                continue
            size = len(G.subgroup_closure([*chosen, e]))
            if size > best_size:
                best = e
                best_size = size
        chosen.append(best)
        current = G.subgroup_closure(chosen)
    return chosen


def _span_words(G: FiniteGroup, gens: list[int]):
    """BFS over right multiplication by ``gens``; returns discovery order plus
    (parent, generator position) so any map on ``gens`` extends to all of G."""
    n = G.order
    parent = [-1] * n
    pgen = [-1] * n
    order = [0]
    seen = bytearray(n)
    seen[0] = 1
    mul = G.mul
    for x in order:
        for gi, g in enumerate(gens):
            y = mul(x, g)
            if not seen[y]:
                seen[y] = 1
                parent[y] = x
                pgen[y] = gi
                order.append(y)
    if len(order) != n:
        raise ValueError("sequence does not generate the group")
    return order, parent, pgen


def compute_aut(G: FiniteGroup, *, cap: int = DEFAULT_AUT_CAP,
                verify_closure: bool = True) -> list[Automorphism]:
    """The complete automorphism group, deterministically ordered by the
    image tuple of the chosen generating sequence.

    The result is cached on the group.  ``verify_closure`` re-checks that the
    output is a group (identity, inverses, compositions); the composition
    check runs on all pairs up to :data:`FULL_CLOSURE_CHECK_LIMIT` maps and on
    a deterministic slice beyond that.
    """
    if G._aut is not None:
        return G._aut
    n = G.order
    if n > cap:
        raise ResourceLimitError(f"group order {n} exceeds Aut cap {cap}")
    table = G.multiplication_table()
    np_table = G.np_table()
    gens = generating_sequence(G) or [0]
    k = len(gens)
    bfs_order, parent, pgen = _span_words(G, gens)
    orders = G.orders
    csize = [G.class_size(e) for e in range(n)]

    cands = [
        [e for e in range(n)
         if orders[e] == orders[g] and csize[e] == csize[g]]
        for g in gens
    ]
    # pairwise fingerprints of the generating sequence
    pair_order = [[orders[table[a * n + b]] for b in gens] for a in gens]
    pair_csize = [[csize[table[a * n + b]] for b in gens] for a in gens]

    extend_order = bfs_order[1:]
    results: list[Automorphism] = []
    images = [0] * k

    def leaf() -> None:
        phi = [0] * n
        for e in extend_order:
            phi[e] = table[phi[parent[e]] * n + images[pgen[e]]]
        if len(set(phi)) != n:
            return
        m = np.array(phi, dtype=np.int32)
        if not np.array_equal(m[np_table], np_table[m[:, None], m[None, :]]):
            return
        results.append(tuple(phi))

    def descend(i: int) -> None:
        for c in cands[i]:
            ok = True
            for j in range(i):
                cj = images[j]
                if c == cj:
                    ok = False
                    break
                if orders[table[cj * n + c]] != pair_order[j][i] or \
                        orders[table[c * n + cj]] != pair_order[i][j] or \
                        csize[table[cj * n + c]] != pair_csize[j][i]:
                    ok = False
                    break
            if not ok:
                continue
            images[i] = c
            if i + 1 == k:
                leaf()
            else:
                descend(i + 1)

    descend(0)
    results.sort(key=lambda phi: tuple(phi[g] for g in gens))
    if verify_closure:
        _verify_group(G, results, gens)
    G._aut = results
    return results


def _verify_group(G: FiniteGroup, auts: list[Automorphism],
                  gens: list[int]) -> None:
    """Check the output is a group of maps.

    Since each map was verified multiplicative and the fingerprint on a
    generating sequence determines a homomorphism uniquely, membership of a
    composite or inverse only needs its fingerprint looked up.
    """
    n = G.order
    fp = {tuple(phi[g] for g in gens): phi for phi in auts}
    if len(fp) != len(auts):
        raise ConsistencyError("duplicate automorphisms in output")
    ident = fp.get(tuple(gens))
    if ident is None or ident != tuple(range(n)):
        raise ConsistencyError("identity automorphism missing")
    for phi in auts:
        inv = [0] * n
        for e, img in enumerate(phi):
            inv[img] = e
        if tuple(inv[g] for g in gens) not in fp:
            raise ConsistencyError("automorphism set not closed under inverse")
    firsts = auts if len(auts) <= FULL_CLOSURE_CHECK_LIMIT else auts[:50]
    for phi in firsts:
        for psi in auts:
            if tuple(phi[psi[g]] for g in gens) not in fp:
                raise ConsistencyError(
                    "automorphism set not closed under composition")


def apply_to_vector(phi: Automorphism, vector) -> tuple[int, ...]:
    """Coordinatewise image of a tuple of element ids."""
    return tuple(phi[x] for x in vector)


def inner_automorphism(G: FiniteGroup, g: int) -> Automorphism:
    """The conjugation map x -> g x g^{-1}."""
    gi = G.inverses[g]
    mul = G.mul
    return tuple(mul(mul(g, x), gi) for x in range(G.order))
