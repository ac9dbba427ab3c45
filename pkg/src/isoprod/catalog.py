"""Built-in catalog of the groups appearing in the reference tables.

Each entry ships explicit permutation generators in cycle notation; the
claimed order is validated the first time the group is materialized.  For the
three 2-groups known only by their small-group ids, the constructions below
were validated by reproducing their classification rows; see the README.

* ``g16``  is (Z2 x Z2) : Z4, the cyclic factor swapping the two involutions.
* ``g32``  is (Z2)^4 : Z2 acting on the translations of F_2^4 by the linear
  involution e2 -> e1+e2, e4 -> e3+e4.
* PSL(2,7) and PSL(2,8) act on their projective lines (z -> z+1, z -> -1/z,
  and for characteristic 2 also z -> wz with w a generator of F_8^*).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteGroup, close, parse_cycles


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    small_group_id: tuple[int, int] | None
    degree: int
    cycles: tuple[str, ...]
    description: str


_ENTRIES = [
    CatalogEntry("a5", 60, (60, 5), 5,
                 ("(1 2 3 4 5)", "(1 2)(3 4)"),
                 "alternating group A5"),
    CatalogEntry("a6", 360, (360, 118), 6,
                 ("(1 2 3)", "(2 3 4 5 6)"),
                 "alternating group A6 = PSL(2,9)"),
    CatalogEntry("s4", 24, (24, 12), 4,
                 ("(1 2 3 4)", "(1 2)"),
                 "symmetric group S4"),
    CatalogEntry("s5", 120, (120, 34), 5,
                 ("(1 2 3 4 5)", "(1 2)"),
                 "symmetric group S5"),
    CatalogEntry("s6", 720, (720, 763), 6,
                 ("(1 2 3 4 5 6)", "(1 2)"),
                 "symmetric group S6"),
    CatalogEntry("s4xz2", 48, (48, 48), 6,
                 ("(1 2 3 4)", "(1 2)", "(5 6)"),
                 "S4 x Z2"),
    CatalogEntry("psl27", 168, (168, 42), 8,
                 ("(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)"),
                 "PSL(2,7) on the projective line over F7"),
    CatalogEntry("psl27xz2", 336, (336, 209), 10,
                 ("(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)", "(9 10)"),
                 "PSL(2,7) x Z2"),
    CatalogEntry("psl28", 504, (504, 156), 9,
                 ("(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)",
                  "(1 9)(3 6)(4 7)(5 8)"),
                 "PSL(2,8) on the projective line over F8"),
    CatalogEntry("z5xz5", 25, (25, 2), 10,
                 ("(1 2 3 4 5)", "(6 7 8 9 10)"),
                 "elementary abelian (Z5)^2"),
    CatalogEntry("z7xz7", 49, (49, 2), 14,
                 ("(1 2 3 4 5 6 7)", "(8 9 10 11 12 13 14)"),
                 "elementary abelian (Z7)^2"),
    CatalogEntry("z3xz3", 9, (9, 2), 6,
                 ("(1 2 3)", "(4 5 6)"),
                 "elementary abelian (Z3)^2"),
    CatalogEntry("z2xz2xz2", 8, (8, 5), 6,
                 ("(1 2)", "(3 4)", "(5 6)"),
                 "elementary abelian (Z2)^3"),
    CatalogEntry("z2xz2xz2xz2", 16, (16, 14), 8,
                 ("(1 2)", "(3 4)", "(5 6)", "(7 8)"),
                 "elementary abelian (Z2)^4"),
    CatalogEntry("d4xz2", 16, (16, 11), 6,
                 ("(1 2 3 4)", "(1 3)", "(5 6)"),
                 "D4 x Z2"),
    CatalogEntry("g16", 16, (16, 3), 8,
                 ("(1 2)", "(3 4)", "(1 3 2 4)(5 6 7 8)"),
                 "(Z2 x Z2) : Z4"),
    CatalogEntry("g32", 32, (32, 27), 16,
                 ("(1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)(8 16)",
                  "(1 5)(2 6)(3 7)(4 8)(9 13)(10 14)(11 15)(12 16)",
                  "(1 3)(2 4)(5 7)(6 8)(9 11)(10 12)(13 15)(14 16)",
                  "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16)",
                  "(2 4)(5 13)(6 16)(7 15)(8 14)(10 12)"),
                 "(Z2)^4 : Z2"),
]

CATALOG: dict[str, CatalogEntry] = {e.name: e for e in _ENTRIES}

ALIASES = {
    "psl29": "a6",
    "z2^3": "z2xz2xz2",
    "z2^4": "z2xz2xz2xz2",
}

_built: dict[str, FiniteGroup] = {}


def entry(name: str) -> CatalogEntry:
    key = name.lower()
    key = ALIASES.get(key, key)
    if key not in CATALOG:
        raise KeyError(f"unknown group {name!r}; see the 'groups' command")
    return CATALOG[key]


def build_group(name: str) -> FiniteGroup:
    """Materialize a catalog group (cached) and validate its claimed order."""
    e = entry(name)
    if e.name not in _built:
        gens = [parse_cycles(c, e.degree) for c in e.cycles]
        G = close(e.degree, gens)
        if G.order != e.order:
            raise AssertionError(
                f"catalog entry {e.name}: built order {G.order} != claimed "
                f"{e.order}")
        _built[e.name] = G
    return _built[e.name]


def list_entries() -> list[CatalogEntry]:
    return sorted(_ENTRIES, key=lambda e: (-e.order, e.name))
