"""Moduli components for a group and a pair of signatures.

The pipeline: enumerate spherical generating systems of each signature,
partition them into braid orbits, keep the orbit pairs whose stabilizer sets
meet only in the identity, then identify pairs under simultaneous
automorphisms of the group (and under swapping the two factors when the
signatures coincide).  Each surviving class is one irreducible component of
the moduli space and is reported through its lexicographically least
representative pair, together with the first homology group of the surface.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .automorphisms import DEFAULT_AUT_CAP, apply_to_vector, compute_aut
from .braid import DEFAULT_ORBIT_CAP, BraidOrbit, orbit_partition
from .errors import ConsistencyError
from .groups import FiniteGroup
from .homology import AbelianInvariants, first_homology
from .vectors import (SurfaceInvariants, Vector, curve_genus,
                      enumerate_vectors, stabilizer_set, surface_invariants,
                      validate_signature)


@dataclass
class ComponentRecord:
    """One irreducible moduli component: a representative disjoint pair, the
    surface's numerical invariants, and its first homology group."""
    rep1: Vector
    rep2: Vector
    invariants: SurfaceInvariants
    homology: AbelianInvariants | None = None


def braid_orbit_classes(G: FiniteGroup, signature, *,
                        orbit_cap: int = DEFAULT_ORBIT_CAP) -> list[BraidOrbit]:
    """Braid orbits of all spherical systems of the signature, cached on the
    group (the same signature often recurs across classification runs)."""
    cache = getattr(G, "_orbit_cache", None)
    if cache is None:
        cache = G._orbit_cache = {}
    key = tuple(signature)
    if key not in cache:
        cache[key] = orbit_partition(G, enumerate_vectors(G, key),
                                     orbit_cap=orbit_cap)
    return cache[key]


def aut_orbit_quotient(pairs, orbit_maps1, orbit_maps2,
                       allow_swap: bool) -> list[tuple[int, int]]:
    """Pick one representative orbit pair per class under the automorphism
    action (and factor swap when ``allow_swap``).

    ``orbit_maps*[a][i]`` is the orbit index of the image of orbit ``i``
    under automorphism ``a``.  Representatives come back in increasing index
    order, which is lexicographic on representatives.
    """
    work = set(pairs)
    reps: list[tuple[int, int]] = []
    while work:
        pair = min(work)
        reps.append(pair)
        i, j = pair
        for m1, m2 in zip(orbit_maps1, orbit_maps2):
            image = (m1[i], m2[j])
            work.discard(image)
            if allow_swap:
                work.discard((image[1], image[0]))
    return reps


def _orbit_action(auts, orbits, index) -> list[list[int]]:
    maps = []
    for phi in auts:
        row = []
        for orbit in orbits:
            image = apply_to_vector(phi, orbit.representative)
            target = index.get(image)
            if target is None:
                raise ConsistencyError(
                    "automorphism image of an orbit representative is not in "
                    "the enumerated orbit list")
            row.append(target)
        maps.append(row)
    return maps


def classify(G: FiniteGroup, t1, t2, *, with_homology: bool = True,
             orbit_cap: int = DEFAULT_ORBIT_CAP,
             aut_cap: int = DEFAULT_AUT_CAP,
             threads: int = 1) -> list[ComponentRecord]:
    """All moduli components for (G, t1, t2), deterministically ordered by
    representative pair.

    An empty result is a valid outcome (no systems, or no disjoint pair).
    Signatures whose covering curves would have genus < 2 are rejected,
    except that a period with no elements of that order short-circuits to the
    empty result before any genus question arises.
    """
    t1 = tuple(t1)
    t2 = tuple(t2)
    validate_signature(t1, min_length=3)
    validate_signature(t2, min_length=3)
    by_order = G.order_classes()
    if any(m not in by_order for m in t1 + t2):
        return []
    curve_genus(G.order, t1)
    curve_genus(G.order, t2)
    invariants = surface_invariants(G.order, t1, t2)

    orbits1 = braid_orbit_classes(G, t1, orbit_cap=orbit_cap)
    if not orbits1:
        return []
    same = t1 == t2
    orbits2 = orbits1 if same else braid_orbit_classes(G, t2,
                                                       orbit_cap=orbit_cap)
    if not orbits2:
        return []

    stabs1 = [stabilizer_set(G, o.representative) for o in orbits1]
    stabs2 = stabs1 if same else [stabilizer_set(G, o.representative)
                                  for o in orbits2]
    pairs = {(i, j)
             for i, s1 in enumerate(stabs1)
             for j, s2 in enumerate(stabs2)
             if len(s1 & s2) == 1}
    if not pairs:
        return []

    auts = compute_aut(G, cap=aut_cap)
    index1 = {v: i for i, orbit in enumerate(orbits1) for v in orbit.members}
    maps1 = _orbit_action(auts, orbits1, index1)
    if same:
        maps2 = maps1
    else:
        index2 = {v: i for i, orbit in enumerate(orbits2)
                  for v in orbit.members}
        maps2 = _orbit_action(auts, orbits2, index2)

    reps = aut_orbit_quotient(pairs, maps1, maps2, allow_swap=same)
    records = [ComponentRecord(rep1=orbits1[i].representative,
                               rep2=orbits2[j].representative,
                               invariants=invariants)
               for i, j in reps]
    if with_homology:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [pool.submit(first_homology, G, r.rep1, r.rep2,
                                       check=False)
                           for r in records]
                for record, fut in zip(records, futures):
                    record.homology = fut.result()
        else:
            for record in records:
                record.homology = first_homology(G, record.rep1, record.rep2,
                                                 check=False)
    return records
