"""Spherical generating systems and the numerical invariants they determine.

A spherical generating system of signature (m_1, ..., m_r) is an r-tuple of
group elements whose orders match the signature coordinatewise, whose product
is the identity, and which together generate the group.  Signatures are
ordered tuples here; reorderings are absorbed later by the braid action, so
nothing is lost by fixing the coordinatewise convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentDataError, ValidationError
from .groups import FiniteGroup

Signature = tuple[int, ...]
Vector = tuple[int, ...]


def parse_signature(text: str) -> Signature:
    """Parse a comma-separated signature such as ``2,5,5``."""
    try:
        periods = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed signature: {text!r}") from None
    validate_signature(periods)
    return periods


def validate_signature(sig, *, min_length: int = 1) -> None:
    if len(sig) < min_length:
        raise ValidationError(
            f"signature {sig} has fewer than {min_length} entries")
    if any(m < 2 for m in sig):
        raise ValidationError(f"signature entries must be >= 2: {sig}")


def enumerate_vectors(G: FiniteGroup, signature: Signature) -> list[Vector]:
    """All spherical generating systems of the signature, in lexicographic
    order on element ids.

    Only the first r-1 coordinates are searched; the last is the inverse of
    their product and just needs the right order.  The result is empty when
    some period has no elements of that order.
    """
    validate_signature(signature)
    r = len(signature)
    by_order = G.order_classes()
    classes = [by_order.get(m, []) for m in signature]
    if any(not cls for cls in classes):
        return []
    if r == 1:
        return []
    n = G.order
    table = G.multiplication_table()
    orders = G.orders
    inverses = G.inverses
    m_last = signature[-1]
    last_class = classes[r - 1]
    out: list[Vector] = []
    memo: dict[frozenset[int], bool] = {}

    def generates(entries) -> bool:
        key = frozenset(entries)
        hit = memo.get(key)
        if hit is None:
            hit = memo[key] = G.generates(key)
        return hit

    prefix = [0] * (r - 1)

    def descend(depth: int, acc: int) -> None:
        if depth == r - 2:
            base = acc * n
            for h in classes[depth]:
                p = table[base + h]
                if orders[p] != m_last:
                    continue
                last = inverses[p]
                prefix[depth] = h
                vec = (*prefix, last)
                if generates(vec):
                    out.append(vec)
        else:
            for h in classes[depth]:
                prefix[depth] = h
                descend(depth + 1, table[acc * n + h])

    if r == 2:
        # degenerate: single free coordinate, partner is its inverse
        for h in classes[0]:
            last = inverses[h]
            if orders[last] == m_last and generates((h, last)):
                out.append((h, last))
        return out
    descend(0, 0)
    return out


def stabilizer_set(G: FiniteGroup, vector: Vector) -> frozenset[int]:
    """Union of the conjugacy classes of all powers of the entries, identity
    included: exactly the elements fixing some point of the covering curve."""
    out = {0}
    for h in set(vector):
        x = h
        while x != 0:
            out.update(G.conjugacy_class(x))
            x = G.mul(x, h)
    return frozenset(out)


def disjoint(G: FiniteGroup, v1: Vector, v2: Vector) -> bool:
    """True iff the stabilizer sets meet only in the identity (the diagonal
    action on the product of the two curves is then free)."""
    s1 = stabilizer_set(G, v1)
    s2 = stabilizer_set(G, v2)
    return len(s1 & s2) == 1


def curve_genus(group_order: int, signature: Signature) -> int:
    """Genus of the covering curve over the line with the given branching
    orders: 2g - 2 = |G| (-2 + sum (m_i - 1)/m_i).

    Raises :class:`InconsistentDataError` when the right-hand side is not an
    even integer (no covering exists) and :class:`ValidationError` when
    g < 2 (covering exists but the surface would not be of general type).
    """
    validate_signature(signature)
    rhs = Fraction(-2)
    for m in signature:
        rhs += Fraction(m - 1, m)
    rhs *= group_order
    if rhs.denominator != 1 or rhs.numerator % 2:
        raise InconsistentDataError(
            f"no covering: 2g - 2 = {rhs} is not an even integer "
            f"(order {group_order}, signature {signature})")
    g = rhs.numerator // 2 + 1
    if g < 2:
        raise ValidationError(
            f"covering curve has genus {g} < 2 "
            f"(order {group_order}, signature {signature})")
    return g


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical invariants of the quotient surface."""
    g1: int          # genus of the first covering curve
    g2: int          # genus of the second covering curve
    chi: int         # holomorphic Euler characteristic
    pg: int          # geometric genus (= chi - 1, the surface is regular)
    q: int           # irregularity, always 0 here
    euler: int       # topological Euler number, = 4 chi
    dimension: int   # dimension of the family, r + s - 6


def surface_invariants(group_order: int, t1: Signature,
                       t2: Signature) -> SurfaceInvariants:
    """Invariants of the surface for a disjoint pair of the two signatures.

    chi = (g1-1)(g2-1)/|G| must come out an exact integer; any pair acting
    freely forces that, so a remainder signals data that admits no such
    surface.
    """
    g1 = curve_genus(group_order, t1)
    g2 = curve_genus(group_order, t2)
    num = (g1 - 1) * (g2 - 1)
    if num % group_order:
        raise InconsistentDataError(
            f"chi = {num}/{group_order} is not an integer; no free action "
            f"exists for signatures {t1} x {t2}")
    chi = num // group_order
    return SurfaceInvariants(
        g1=g1, g2=g2, chi=chi, pg=chi - 1, q=0, euler=4 * chi,
        dimension=len(t1) + len(t2) - 6)
