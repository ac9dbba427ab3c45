"""First homology of the surface attached to a disjoint pair of spherical
generating systems.

The fundamental group of the surface is the fiber product of the two
polygonal (genus-0 orbifold) groups over their common finite quotient.  It
sits inside the direct product with index |G|, and because the quotient map
to G is explicit, the coset table of that subgroup can be written down in
closed form — no coset enumeration is ever run.  A Schreier transversal then
yields a presentation of the subgroup (Reidemeister-Schreier rewriting), and
integer Smith normal form of its relation matrix gives the abelianization,
which is the first homology group.

Words are sequences of signed 1-based generator indices: ``+k`` is generator
k, ``-k`` its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, ValidationError
from .groups import FiniteGroup
from .snf import cokernel_invariants
from .vectors import curve_genus

Word = tuple[int, ...]


@dataclass(frozen=True)
class FpPresentation:
    """A finitely presented group: generator count plus relator words."""
    ngens: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        for w in self.relators:
            for x in w:
                if x == 0 or abs(x) > self.ngens:
                    raise ValueError(f"letter {x} out of range in relator {w}")


@dataclass(frozen=True)
class AbelianInvariants:
    """Isomorphism type of a finitely generated abelian group: free rank plus
    torsion coefficients in a divisibility chain d_1 | d_2 | ... (each >= 2).
    """
    rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion entries must be >= 2: {self.torsion}")

    def primary_decomposition(self) -> tuple[int, ...]:
        """Prime-power cyclic factors, sorted."""
        out = []
        for d in self.torsion:
            m = d
            p = 2
            while p * p <= m:
                if m % p == 0:
                    q = 1
                    while m % p == 0:
                        m //= p
                        q *= p
                    out.append(q)
                p += 1
            if m > 1:
                out.append(m)
        return tuple(sorted(out))

    def rendered(self) -> str:
        """Display form grouping equal chain factors, e.g. ``(Z3)^2 x Z15``.

        The trivial group renders as ``0``.
        """
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        i = 0
        t = self.torsion
        while i < len(t):
            j = i
            while j < len(t) and t[j] == t[i]:
                j += 1
            count = j - i
            parts.append(f"Z{t[i]}" if count == 1 else f"(Z{t[i]})^{count}")
            i = j
        return " x ".join(parts) if parts else "0"


def polygonal_presentation(signature) -> FpPresentation:
    """Genus-0 orbifold group of the given signature: generators c_1..c_r,
    relators c_i^{m_i} and c_1 c_2 ... c_r."""
    r = len(signature)
    relators = [(i,) * m for i, m in enumerate(signature, start=1)]
    relators.append(tuple(range(1, r + 1)))
    return FpPresentation(r, tuple(relators))


def direct_product_presentation(p1: FpPresentation,
                                p2: FpPresentation) -> FpPresentation:
    """Presentation of the direct product: both relator sets (second shifted)
    plus all pairwise commutators."""
    n1 = p1.ngens
    shift = lambda x: x + n1 if x > 0 else x - n1
    relators = list(p1.relators)
    relators += [tuple(shift(x) for x in w) for w in p2.relators]
    for i in range(1, n1 + 1):
        for j in range(n1 + 1, n1 + p2.ngens + 1):
            relators.append((i, j, -i, -j))
    return FpPresentation(n1 + p2.ngens, tuple(relators))


@dataclass
class CosetTable:
    """Permutation action of ambient generators on right cosets of a
    subgroup; ``base`` is the coset of the subgroup itself."""
    size: int
    action: list[list[int]]       # one row per ambient generator
    base: int = 0

    def inverse_action(self) -> list[list[int]]:
        inv = []
        for row in self.action:
            out = [0] * self.size
            for i, img in enumerate(row):
                out[img] = i
            inv.append(out)
        return inv

    def validate(self, presentation: FpPresentation) -> None:
        """Check bijectivity of every row, transitivity from the base point,
        and that every relator acts trivially."""
        n = self.size
        if len(self.action) != presentation.ngens:
            raise ConsistencyError("coset table width != generator count")
        for t, row in enumerate(self.action):
            if sorted(row) != list(range(n)):
                raise ConsistencyError(f"action row {t} is not a bijection")
        seen = {self.base}
        frontier = [self.base]
        for c in frontier:
            for row in self.action:
                d = row[c]
                if d not in seen:
                    seen.add(d)
                    frontier.append(d)
        if len(seen) != n:
            raise ConsistencyError("coset action is not transitive")
        inv = self.inverse_action()
        for w in presentation.relators:
            for c in range(n):
                cur = c
                for x in w:
                    cur = self.action[x - 1][cur] if x > 0 else inv[-x - 1][cur]
                if cur != c:
                    raise ConsistencyError(
                        f"relator {w} acts nontrivially on coset {c}")


def diagonal_coset_table(G: FiniteGroup, v1, v2) -> CosetTable:
    """Coset table of the fiber product inside the direct product of the two
    polygonal groups.

    Cosets are indexed by elements c of G via (a, b)-coset -> a^-1 b.  A
    first-factor generator with image h acts by c -> h^-1 c; a second-factor
    generator with image k acts by c -> c k.  Generators are ordered as
    v1 followed by v2.
    """
    for v in (v1, v2):
        if not G.generates(v):
            raise ValueError("vector entries do not generate the group")
    n = G.order
    table = G.multiplication_table()
    inv = G.inverses
    action = []
    for h in v1:
        hi = inv[h]
        base = hi * n
        action.append([table[base + c] for c in range(n)])
    for k in v2:
        action.append([table[c * n + k] for c in range(n)])
    ct = CosetTable(n, action, 0)
    sig1 = tuple(G.orders[h] for h in v1)
    sig2 = tuple(G.orders[k] for k in v2)
    pres = direct_product_presentation(polygonal_presentation(sig1),
                                       polygonal_presentation(sig2))
    ct.validate(pres)
    return ct


def schreier_transversal(ct: CosetTable, gen_order=None):
    """BFS spanning tree of the coset graph from the base point.

    Returns ``(order, tree)`` where ``order`` lists cosets in discovery order
    and ``tree`` maps coset -> (parent coset, generator index) for non-base
    cosets.  ``gen_order`` permutes the generator scan order (used to realize
    a different transversal; defaults to index order).
    """
    gens = list(gen_order) if gen_order is not None else list(
        range(len(ct.action)))
    tree: dict[int, tuple[int, int]] = {}
    order = [ct.base]
    seen = {ct.base}
    for c in order:
        for t in gens:
            d = ct.action[t][c]
            if d not in seen:
                seen.add(d)
                tree[d] = (c, t)
                order.append(d)
    if len(order) != ct.size:
        raise ConsistencyError("coset action is not transitive")
    return order, tree


def rewrite_presentation(p: FpPresentation, ct: CosetTable, *,
                         gen_order=None) -> FpPresentation:
    """Presentation of the subgroup the coset table describes, on Schreier
    generators over a BFS transversal.

    Generator count is ``size * ngens - (size - 1)``; the relators are all
    transversal conjugates of the ambient relators, rewritten through the
    table and freely reduced.
    """
    n = ct.size
    ngens = p.ngens
    order, tree = schreier_transversal(ct, gen_order)
    tree_edges = {(c, t) for d, (c, t) in tree.items()}
    # Schreier generator ids, 1-based; tree edges get 0 (trivial)
    sgen: dict[tuple[int, int], int] = {}
    nxt = 1
    for c in range(n):
        for t in range(ngens):
            if (c, t) in tree_edges:
                sgen[(c, t)] = 0
            else:
                sgen[(c, t)] = nxt
                nxt += 1
    inv_action = ct.inverse_action()
    relators = []
    for start in range(n):
        for w in p.relators:
            out: list[int] = []
            cur = start
            for x in w:
                if x > 0:
                    t = x - 1
                    g = sgen[(cur, t)]
                    if g:
                        if out and out[-1] == -g:
                            out.pop()
                        else:
                            out.append(g)
                    cur = ct.action[t][cur]
                else:
                    t = -x - 1
                    prev = inv_action[t][cur]
                    g = sgen[(prev, t)]
                    if g:
                        if out and out[-1] == g:
                            out.pop()
                        else:
                            out.append(-g)
                    cur = prev
            if cur != start:
                raise ConsistencyError(
                    f"relator {w} does not close up at coset {start}")
            relators.append(tuple(out))
    return FpPresentation(nxt - 1, tuple(relators))


def abelian_invariants(p: FpPresentation, *, max_rows: int = 50_000,
                       max_cols: int = 20_000) -> AbelianInvariants:
    """Abelianization of a finitely presented group, from the Smith normal
    form of the relator exponent matrix."""
    rows = []
    for w in p.relators:
        row: dict[int, int] = {}
        for x in w:
            g = abs(x)
            row[g] = row.get(g, 0) + (1 if x > 0 else -1)
        rows.append(row)
    rank, torsion = cokernel_invariants(rows, p.ngens, max_rows=max_rows,
                                        max_cols=max_cols)
    return AbelianInvariants(rank, torsion)


def first_homology(G: FiniteGroup, v1, v2, *, check: bool = True,
                   gen_order=None) -> AbelianInvariants:
    """H_1 of the quotient surface for the disjoint pair (v1, v2).

    The result is always a finite group here (both quotient curves are
    rational, so the surface is regular); a nonzero free rank means the input
    pair was not disjoint or something upstream is broken, and raises.
    """
    from .vectors import disjoint

    sig1 = tuple(G.orders[h] for h in v1)
    sig2 = tuple(G.orders[k] for k in v2)
    if check:
        for sig in (sig1, sig2):
            g = curve_genus(G.order, sig)
            if g < 2:
                raise ValidationError(f"covering curve genus {g} < 2")
        if not disjoint(G, v1, v2):
            raise ValidationError("vectors are not disjoint")
    pres = direct_product_presentation(polygonal_presentation(sig1),
                                       polygonal_presentation(sig2))
    ct = diagonal_coset_table(G, v1, v2)
    sub = rewrite_presentation(pres, ct, gen_order=gen_order)
    inv = abelian_invariants(sub)
    if inv.rank != 0:
        raise ConsistencyError(
            f"first homology has free rank {inv.rank}; input pair cannot "
            f"act freely")
    return inv
