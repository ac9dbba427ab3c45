"""Finite permutation groups, fully materialized.

A permutation on ``n`` points is a tuple ``p`` of length ``n`` with ``p[i]``
the image of point ``i`` (0-based).  Products apply **left to right**:
``compose(p, q)`` maps ``i`` to ``q[p[i]]``, i.e. ``p`` acts first.  Every
product taken anywhere in this package (words in generators, conjugation,
coset actions) uses this one convention.

A :class:`FiniteGroup` is built by breadth-first closure from explicit
generators and stores the full element list (identity first), an index map,
element orders, inverses, and a per-generator multiplication table.  A full
``|G| x |G|`` table on element ids is built lazily for groups up to
``table_cap`` elements; the hot enumeration loops in the other modules index
into that flat table directly.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ResourceLimitError

Perm = tuple[int, ...]

DEFAULT_ELEMENT_CAP = 100_000
DEFAULT_TABLE_CAP = 1024


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """Product "p then q": the permutation mapping i to q[p[i]]."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(q[i] for i in p)


def inverse_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse disjoint-cycle notation with 1-based points, e.g. ``(1 2 3)(4 5)``.

    ``()`` and the empty string denote the identity.  Points may be separated
    by spaces or commas.
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return identity_perm(degree)
    if not re.fullmatch(r"(\s*\([0-9,\s]*\)\s*)+", stripped):
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(stripped):
        points = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
        if not points:
            continue
        for pt in points:
            if not 1 <= pt <= degree:
                raise ValueError(f"point {pt} outside 1..{degree}")
            if pt - 1 in seen:
                raise ValueError(f"point {pt} repeated in {text!r}")
            seen.add(pt - 1)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def format_cycles(p: Perm) -> str:
    """Disjoint-cycle string with 1-based points; identity renders as ``()``."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        parts.append("(" + " ".join(str(i + 1) for i in cycle) + ")")
    return "".join(parts) if parts else "()"


class FiniteGroup:
    """A finite permutation group with every element materialized.

    Elements are addressed by id (index into ``elements``); id 0 is the
    identity.  Instances are immutable after construction and safe to share.
    Use :func:`close` to build one.
    """

    def __init__(self, degree: int, generators: list[Perm], *,
                 element_cap: int = DEFAULT_ELEMENT_CAP,
                 table_cap: int = DEFAULT_TABLE_CAP):
        if not generators:
            raise ValueError("at least one generator required")
        for g in generators:
            if len(g) != degree:
                raise ValueError(f"generator degree {len(g)} != {degree}")
            if not is_permutation(g):
                raise ValueError(f"not a permutation: {g}")
        self.degree = degree
        self.generators = tuple(generators)
        self.table_cap = table_cap
        self._close(element_cap)
        self._table: list[int] | None = None
        self._np_table = None
        self._class_id: list[int] | None = None
        self._classes: list[frozenset[int]] | None = None
        self._order_classes: dict[int, list[int]] | None = None
        self._aut: list[tuple[int, ...]] | None = None

    # -- construction ------------------------------------------------------

    def _close(self, element_cap: int) -> None:
        """BFS closure from the identity, right-multiplying by generators in
        input order.  Enumeration order is deterministic."""
        ident = identity_perm(self.degree)
        gens = self.generators
        k = len(gens)
        elements: list[Perm] = [ident]
        index: dict[Perm, int] = {ident: 0}
        mul_gen: list[int] = []          # flat (element id, generator id) -> id
        parent: list[int] = [0]          # BFS tree: parent element id
        parent_gen: list[int] = [0]      # generator used from parent
        i = 0
        while i < len(elements):
            e = elements[i]
            for gi in range(k):
                f = compose(e, gens[gi])
                fi = index.get(f)
                if fi is None:
                    fi = len(elements)
                    if fi >= element_cap:
                        raise ResourceLimitError(
                            f"group closure exceeded element cap {element_cap}")
                    elements.append(f)
                    index[f] = fi
                    parent.append(i)
                    parent_gen.append(gi)
                mul_gen.append(fi)
            i += 1
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self.mul_gen = mul_gen
        self.parent = parent
        self.parent_gen = parent_gen
        self.gen_ids = tuple(index[g] for g in gens)
        self.inverses = [index[inverse_perm(e)] for e in elements]
        self.orders = self._element_orders()

    def _element_orders(self) -> list[int]:
        orders = [1] * self.order
        index = self.index
        for i, e in enumerate(self.elements[1:], start=1):
            x = e
            k = 1
            while True:
                x = compose(x, e)
                k += 1
                if x == self.elements[0]:
                    break
            orders[i] = k
        return orders

    # -- products ----------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        """Product of element ids, a then b."""
        if self._table is not None:
            return self._table[a * self.order + b]
        return self.index[compose(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverses[a], -k)
        out = 0
        while k:
            out = self.mul(out, a)
            k -= 1
        return out

    def order_of(self, a: int) -> int:
        return self.orders[a]

    def multiplication_table(self) -> list[int]:
        """Flat ``order x order`` table: ``table[a * order + b] = a * b``.

        Built on first use; groups above ``table_cap`` elements refuse (the
        classification pipeline needs the flat table, so the cap bounds its
        memory use).
        """
        if self._table is None:
            n = self.order
            if n > self.table_cap:
                raise ResourceLimitError(
                    f"group order {n} exceeds multiplication table cap "
                    f"{self.table_cap}")
            k = len(self.generators)
            mul_gen = self.mul_gen
            parent = self.parent
            parent_gen = self.parent_gen
            table = [0] * (n * n)
            for a in range(n):
                base = a * n
                table[base] = a
                # b in BFS order guarantees table[a][parent[b]] is ready
                for b in range(1, n):
                    table[base + b] = mul_gen[table[base + parent[b]] * k
                                              + parent_gen[b]]
            self._table = table
        return self._table

    def np_table(self):
        """The multiplication table as an (order, order) numpy int array."""
        if self._np_table is None:
            import numpy as np
            flat = self.multiplication_table()
            self._np_table = np.array(flat, dtype=np.int32).reshape(
                self.order, self.order)
        return self._np_table

    # -- conjugacy ---------------------------------------------------------

    def _build_classes(self) -> None:
        n = self.order
        class_id = [-1] * n
        classes: list[frozenset[int]] = []
        gen_ids = self.gen_ids
        inv = self.inverses
        mul = self.mul
        for e in range(n):
            if class_id[e] >= 0:
                continue
            cid = len(classes)
            orbit = [e]
            class_id[e] = cid
            for x in orbit:
                for g in gen_ids:
                    y = mul(mul(g, x), inv[g])
                    if class_id[y] < 0:
                        class_id[y] = cid
                        orbit.append(y)
            classes.append(frozenset(orbit))
        self._class_id = class_id
        self._classes = classes

    def conjugacy_class(self, a: int) -> frozenset[int]:
        """The full class {x a x^-1 : x in G}."""
        if self._class_id is None:
            self._build_classes()
        return self._classes[self._class_id[a]]

    def class_size(self, a: int) -> int:
        return len(self.conjugacy_class(a))

    # -- generation --------------------------------------------------------

    def subgroup_closure(self, ids) -> frozenset[int]:
        """Element ids of the subgroup generated by ``ids``."""
        seen = bytearray(self.order)
        seen[0] = 1
        members = [0]
        gens = sorted({g for g in ids if g})
        mul = self.mul
        for x in members:
            for g in gens:
                y = mul(x, g)
                if not seen[y]:
                    seen[y] = 1
                    members.append(y)
        return frozenset(members)

    def generates(self, ids) -> bool:
        """True iff ``ids`` generate the whole group."""
        n = self.order
        seen = bytearray(n)
        seen[0] = 1
        members = [0]
        count = 1
        gens = sorted({g for g in ids if g})
        mul = self.mul
        for x in members:
            for g in gens:
                y = mul(x, g)
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    if count == n:
                        return True
                    members.append(y)
        return count == n

    def order_classes(self) -> dict[int, list[int]]:
        """Element ids grouped by element order, each list ascending."""
        if self._order_classes is None:
            out: dict[int, list[int]] = {}
            for e, m in enumerate(self.orders):
                out.setdefault(m, []).append(e)
            self._order_classes = out
        return self._order_classes

    def __repr__(self) -> str:
        return (f"FiniteGroup(order={self.order}, degree={self.degree}, "
                f"ngens={len(self.generators)})")


def close(degree: int, generators: list[Perm], *,
          element_cap: int = DEFAULT_ELEMENT_CAP,
          table_cap: int = DEFAULT_TABLE_CAP) -> FiniteGroup:
    """Materialize the group generated by ``generators``.

    Raises :class:`ResourceLimitError` if the closure exceeds ``element_cap``
    elements.
    """
    return FiniteGroup(degree, list(generators), element_cap=element_cap,
                       table_cap=table_cap)


# -- group definition files --------------------------------------------------

def parse_group_file(text: str) -> tuple[int, list[Perm]]:
    """Parse a group definition: first line ``degree <n>``, then one
    generator per line in disjoint-cycle notation.  Blank lines and ``#``
    comments are ignored."""
    degree = None
    gens: list[Perm] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise ValueError(
                    f"line {lineno}: expected 'degree <n>', got {line!r}")
            degree = int(m.group(1))
            if degree < 1:
                raise ValueError(f"line {lineno}: degree must be positive")
            continue
        gens.append(parse_cycles(line, degree))
    if degree is None:
        raise ValueError("missing 'degree <n>' header line")
    if not gens:
        raise ValueError("no generators given")
    return degree, gens


def load_group_file(path, *, element_cap: int = DEFAULT_ELEMENT_CAP,
                    table_cap: int = DEFAULT_TABLE_CAP) -> FiniteGroup:
    text = Path(path).read_text(encoding="utf-8")
    degree, gens = parse_group_file(text)
    return close(degree, gens, element_cap=element_cap, table_cap=table_cap)
