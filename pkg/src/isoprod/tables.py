"""Reference classification tables used by the ``reproduce`` command.

Table 1: regular surfaces isogenous to a product with p_g = 0 (component
count N, family dimension D, first homology).  Table 2: Beauville surfaces
with p_g = 1 (N, homology).  Table 3: Beauville surfaces with G = PSL(2,q),
q = 7, 8, 9 (N, homology, chi).  Table 4: Beauville surfaces for S5, S6 and
(Z7)^2 (N, homology, chi).

Homology is recorded as pairs (torsion chain, multiplicity); most rows have a
single homology group shared by all N components, but two PSL(2,9) rows split
into components with different homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class TableRow:
    group: str
    t1: tuple[int, ...]
    t2: tuple[int, ...]
    n: int
    homology: tuple[tuple[tuple[int, ...], int], ...]
    dim: int | None = None
    chi: int | None = None
    slow: bool = False


REFERENCE_TABLES: dict[int, tuple[TableRow, ...]] = {
    1: (
        TableRow("a5", (2, 5, 5), (3, 3, 3, 3), 1, (((3, 3, 15), 1),), dim=1),
        TableRow("a5", (5, 5, 5), (2, 2, 2, 3), 1, (((10, 10), 1),), dim=1),
        TableRow("a5", (3, 3, 5), (2, 2, 2, 2, 2), 1, (((2, 2, 2, 6), 1),),
                 dim=2),
        TableRow("s4xz2", (2, 4, 6), (2, 2, 2, 2, 2, 2), 1,
                 (((2, 2, 2, 2, 4), 1),), dim=3),
        TableRow("g32", (2, 2, 4, 4), (2, 2, 2, 4), 1, (((2, 2, 4, 8), 1),),
                 dim=2),
        TableRow("z5xz5", (5, 5, 5), (5, 5, 5), 1, (((5, 5, 5), 1),), dim=0),
        TableRow("s4", (3, 4, 4), (2, 2, 2, 2, 2, 2), 1,
                 (((2, 2, 2, 2, 8), 1),), dim=3),
        TableRow("g16", (2, 2, 4, 4), (2, 2, 4, 4), 1, (((2, 2, 4, 8), 1),),
                 dim=2),
        TableRow("d4xz2", (2, 2, 2, 4), (2, 2, 2, 2, 2, 2), 1,
                 (((2, 2, 2, 4, 4), 1),), dim=4),
        TableRow("z2xz2xz2xz2", (2, 2, 2, 2, 2), (2, 2, 2, 2, 2), 1,
                 (((4, 4, 4, 4), 1),), dim=4),
        TableRow("z3xz3", (3, 3, 3, 3), (3, 3, 3, 3), 1,
                 (((3, 3, 3, 3, 3), 1),), dim=2),
        TableRow("z2xz2xz2", (2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2), 1,
                 (((2, 2, 2, 2, 4, 4), 1),), dim=5),
    ),
    2: (
        TableRow("psl27xz2", (2, 3, 14), (4, 4, 4), 2, (((4, 4), 2),)),
        TableRow("psl27", (7, 7, 7), (3, 3, 4), 2, (((7, 21), 2),)),
        TableRow("psl27", (3, 3, 7), (4, 4, 4), 2, (((4, 12), 2),)),
        TableRow("g128", (4, 4, 4), (4, 4, 4), 2, (((2, 2, 2, 4, 4), 2),)),
    ),
    3: (
        TableRow("psl27", (3, 3, 4), (7, 7, 7), 2, (((7, 21), 2),), chi=2),
        TableRow("psl27", (3, 4, 4), (7, 7, 7), 1, (((7, 28), 1),), chi=4),
        TableRow("psl27", (4, 4, 4), (7, 7, 7), 2, (((28, 28), 2),), chi=6),
        TableRow("psl27", (4, 4, 4), (3, 7, 7), 4, (((4, 28), 4),), chi=4),
        TableRow("psl27", (4, 4, 4), (3, 3, 7), 2, (((4, 12), 2),), chi=2),
        TableRow("psl28", (2, 7, 7), (3, 3, 9), 3, (((3, 21), 3),), chi=6),
        TableRow("psl28", (2, 7, 7), (3, 9, 9), 3, (((3, 63), 3),), chi=12),
        TableRow("psl28", (2, 7, 7), (9, 9, 9), 7, (((9, 63), 7),), chi=18),
        TableRow("psl28", (7, 7, 7), (9, 9, 9), 14, (((63, 63), 14),),
                 chi=48),
        TableRow("psl28", (7, 7, 7), (2, 9, 9), 6, (((7, 63), 6),), chi=20),
        TableRow("psl28", (7, 7, 7), (2, 3, 9), 6, (((7, 21), 6),), chi=4),
        TableRow("psl28", (7, 7, 7), (3, 9, 9), 6, (((21, 63), 6),), chi=32),
        TableRow("psl28", (7, 7, 7), (3, 3, 9), 6, (((21, 21), 6),), chi=16),
        TableRow("a6", (3, 3, 5), (4, 4, 4), 1, (((12, 12), 1),), chi=3),
        TableRow("a6", (3, 5, 5), (4, 4, 4), 1, (((4, 60), 1),), chi=6),
        TableRow("a6", (5, 5, 5), (4, 4, 4), 4,
                 (((20, 60), 2), ((20, 20), 2)), chi=9),
        TableRow("a6", (5, 5, 5), (3, 3, 5), 4,
                 (((5, 15), 2), ((15, 15), 2)), chi=3),
    ),
    4: (
        TableRow("s5", (4, 4, 5), (3, 6, 6), 1, (((3, 24), 1),), chi=3),
        TableRow("s6", (5, 6, 6), (4, 6, 6), 8, (((6, 6), 8),), chi=35,
                 slow=True),
        TableRow("s6", (5, 6, 6), (4, 4, 6), 16, (((2, 24), 16),), chi=28,
                 slow=True),
        TableRow("s6", (5, 6, 6), (4, 4, 4), 8, (((4, 12), 8),), chi=21,
                 slow=True),
        TableRow("s6", (3, 6, 6), (4, 4, 4), 5, (((12, 12), 5),), chi=15,
                 slow=True),
        TableRow("s6", (2, 5, 6), (4, 4, 4), 1, (((4, 4), 1),), chi=6,
                 slow=True),
        TableRow("z7xz7", (7, 7, 7), (7, 7, 7), 7, (((7, 7, 7), 7),), chi=4),
    ),
}
