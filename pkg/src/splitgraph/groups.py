"""Finite groups as explicit multiplication tables.

Elements are indices 0..order-1.  Constructors build cyclic groups,
direct products, and semidirect products; a brute-force generator-image
search decides isomorphism at small orders (intended for order <= 64).
All values are immutable after construction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

__all__ = [
    "GroupTable",
    "Automorphism",
    "Isomorphism",
    "GenerationError",
    "InvalidActionError",
    "NotAHomomorphismError",
    "NotBijectiveError",
    "make_cyclic",
    "direct_product",
    "semidirect_product",
    "kernel_embedding",
    "complement_embedding",
    "identity_automorphism",
    "compose_automorphisms",
    "automorphism_from_generator_images",
    "all_automorphisms",
    "automorphism_table",
    "all_homomorphisms",
    "element_order",
    "involution_count",
    "is_abelian",
    "exponent",
    "generating_set",
    "are_isomorphic",
    "check_group_axioms",
]


class NotAHomomorphismError(ValueError):
    """The generator images do not extend to a homomorphism."""


class NotBijectiveError(ValueError):
    """The extended homomorphism exists but is not a bijection."""


class GenerationError(ValueError):
    """The supplied elements do not generate the group."""


class InvalidActionError(ValueError):
    """The action is not a homomorphism into the automorphism group."""


@dataclass(frozen=True, repr=False)
class GroupTable:
    """A finite group given by its multiplication table.

    ``table[i][j]`` is the index of the product g_i * g_j.  ``name`` is a
    display label and does not participate in equality.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"GroupTable({label!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        """a raised to an integer power, negative exponents via inverses."""
        if k < 0:
            a, k = self.inverse[a], -k
        acc = self.identity
        while k:
            if k & 1:
                acc = self.table[acc][a]
            a = self.table[a][a]
            k >>= 1
        return acc


@dataclass(frozen=True)
class Automorphism:
    """A multiplication-preserving permutation of one group's elements."""

    source: GroupTable
    mapping: tuple[int, ...]

    def __call__(self, e: int) -> int:
        return self.mapping[e]


@dataclass(frozen=True)
class Isomorphism:
    """A multiplication-preserving bijection between two groups."""

    source: GroupTable
    target: GroupTable
    mapping: tuple[int, ...]

    def __call__(self, e: int) -> int:
        return self.mapping[e]


def _inverses(table: tuple[tuple[int, ...], ...], identity: int) -> tuple[int, ...]:
    inv = [-1] * len(table)
    for i, row in enumerate(table):
        inv[i] = row.index(identity)
    return tuple(inv)


def make_cyclic(n: int) -> GroupTable:
    """Cyclic group of order n; element i is the generator to the power i."""
    if n < 1:
        raise ValueError(f"group order must be a positive integer, got {n}")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inverse = tuple((-i) % n for i in range(n))
    return GroupTable(n, table, 0, inverse, name=f"C{n}")


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """Componentwise product; pair (i, j) is encoded row-major as i*|h| + j."""
    m = h.order
    n = g.order * m

    def enc(i: int, j: int) -> int:
        return i * m + j

    table = tuple(
        tuple(
            enc(g.table[a1][a2], h.table[b1][b2])
            for a2 in range(g.order)
            for b2 in range(m)
        )
        for a1 in range(g.order)
        for b1 in range(m)
    )
    identity = enc(g.identity, h.identity)
    inverse = tuple(
        enc(g.inverse[i], h.inverse[j]) for i in range(g.order) for j in range(m)
    )
    name = f"{g.name}x{h.name}" if g.name and h.name else ""
    return GroupTable(n, table, identity, inverse, name=name)


def _check_automorphism(g: GroupTable, mapping: tuple[int, ...]) -> None:
    n = g.order
    if len(mapping) != n or sorted(mapping) != list(range(n)):
        raise NotBijectiveError("mapping is not a permutation of the elements")
    if mapping[g.identity] != g.identity:
        raise NotAHomomorphismError("mapping does not fix the identity")
    for i in range(n):
        for j in range(n):
            if mapping[g.table[i][j]] != g.table[mapping[i]][mapping[j]]:
                raise NotAHomomorphismError(
                    f"mapping breaks multiplication at ({i}, {j})"
                )


def identity_automorphism(g: GroupTable) -> Automorphism:
    return Automorphism(g, tuple(range(g.order)))


def compose_automorphisms(f: Automorphism, s: Automorphism) -> Automorphism:
    """Composition f after s: the result sends e to f(s(e))."""
    return Automorphism(f.source, tuple(f.mapping[x] for x in s.mapping))


def semidirect_product(
    k: GroupTable, a: GroupTable, action: list[Automorphism] | tuple[Automorphism, ...]
) -> GroupTable:
    """Split extension of k by a.

    ``action[j]`` is the automorphism of k by which the j-th element of a
    acts; it must define a homomorphism from a into Aut(k), which is
    validated eagerly.  The pair (i, j) with i in k and j in a is encoded
    as i*|a| + j, and the product law is
    (k1, a1) * (k2, a2) = (k1 * action[a1](k2), a1 * a2).
    """
    m = a.order
    if len(action) != m:
        raise InvalidActionError(f"action must assign one automorphism per element of a ({m} needed)")
    for j, phi in enumerate(action):
        if phi.source != k:
            raise InvalidActionError(f"action[{j}] is not an automorphism of the kernel group")
        try:
            _check_automorphism(k, phi.mapping)
        except (NotAHomomorphismError, NotBijectiveError) as exc:
            raise InvalidActionError(f"action[{j}] is not an automorphism: {exc}") from exc
    ident = tuple(range(k.order))
    if action[a.identity].mapping != ident:
        raise InvalidActionError("the identity of a must act trivially")
    for i in range(m):
        for j in range(m):
            composed = tuple(action[i].mapping[x] for x in action[j].mapping)
            if action[a.table[i][j]].mapping != composed:
                raise InvalidActionError(
                    f"action is not a homomorphism: action[{i}*{j}] differs from action[{i}] after action[{j}]"
                )

    def enc(i: int, j: int) -> int:
        return i * m + j

    table = tuple(
        tuple(
            enc(k.table[k1][action[a1].mapping[k2]], a.table[a1][a2])
            for k2 in range(k.order)
            for a2 in range(m)
        )
        for k1 in range(k.order)
        for a1 in range(m)
    )
    identity = enc(k.identity, a.identity)
    inverse_list = []
    for k1 in range(k.order):
        for a1 in range(m):
            a_inv = a.inverse[a1]
            inverse_list.append(enc(action[a_inv].mapping[k.inverse[k1]], a_inv))
    name = f"{k.name}:{a.name}" if k.name and a.name else ""
    return GroupTable(k.order * m, table, identity, tuple(inverse_list), name=name)


def kernel_embedding(k: GroupTable, a: GroupTable) -> tuple[int, ...]:
    """Indices of k's copy inside semidirect_product(k, a, action)."""
    return tuple(i * a.order + a.identity for i in range(k.order))


def complement_embedding(k: GroupTable, a: GroupTable) -> tuple[int, ...]:
    """Indices of a's copy inside semidirect_product(k, a, action)."""
    return tuple(k.identity * a.order + j for j in range(a.order))


def element_order(g: GroupTable, e: int) -> int:
    """Least m >= 1 with e^m equal to the identity."""
    if not 0 <= e < g.order:
        raise IndexError(f"element index {e} out of range for order {g.order}")
    m = 1
    acc = e
    while acc != g.identity:
        acc = g.table[acc][e]
        m += 1
    return m


def involution_count(g: GroupTable) -> int:
    """Number of elements of order exactly 2."""
    return sum(
        1
        for e in range(g.order)
        if e != g.identity and g.table[e][e] == g.identity
    )


def is_abelian(g: GroupTable) -> bool:
    return all(
        g.table[i][j] == g.table[j][i]
        for i in range(g.order)
        for j in range(i + 1, g.order)
    )


def exponent(g: GroupTable) -> int:
    """Least common multiple of all element orders."""
    return math.lcm(*(element_order(g, e) for e in range(g.order)))


def check_group_axioms(g: GroupTable) -> None:
    """Raise ValueError unless the table is a bona fide group table."""
    n = g.order
    if n < 1:
        raise ValueError("order must be positive")
    if len(g.table) != n or any(len(row) != n for row in g.table):
        raise ValueError("table is not n x n")
    full = set(range(n))
    for i, row in enumerate(g.table):
        if set(row) != full:
            raise ValueError(f"row {i} is not a permutation")
    for j in range(n):
        if {g.table[i][j] for i in range(n)} != full:
            raise ValueError(f"column {j} is not a permutation")
    for i in range(n):
        for j in range(n):
            ij = g.table[i][j]
            for k in range(n):
                if g.table[ij][k] != g.table[i][g.table[j][k]]:
                    raise ValueError(f"associativity fails at ({i}, {j}, {k})")
    for i in range(n):
        if g.table[g.identity][i] != i or g.table[i][g.identity] != i:
            raise ValueError(f"identity axiom fails at {i}")
        if g.table[i][g.inverse[i]] != g.identity:
            raise ValueError(f"inverse axiom fails at {i}")


def _closure(g: GroupTable, gens: list[int]) -> set[int]:
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for gen in gens:
                y = g.table[x][gen]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def generating_set(g: GroupTable) -> tuple[int, ...]:
    """A small generating set, grown greedily by generated-subgroup size."""
    chosen: list[int] = []
    span = {g.identity}
    while len(span) < g.order:
        best = -1
        best_span: set[int] = set()
        for e in range(g.order):
            if e in span:
                continue
            cand = _closure(g, chosen + [e])
            if len(cand) > len(best_span):
                best, best_span = e, cand
                if len(cand) == g.order:
                    break
        chosen.append(best)
        span = best_span
    return tuple(chosen)


def _extend_by_images(
    g: GroupTable, h: GroupTable, gens: tuple[int, ...], images: tuple[int, ...]
) -> list[int] | None:
    """Propagate gens -> images over products; None on conflict or non-generation."""
    mapping = [-1] * g.order
    mapping[g.identity] = h.identity
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            fx = mapping[x]
            for gen, img in zip(gens, images):
                y = g.table[x][gen]
                fy = h.table[fx][img]
                if mapping[y] < 0:
                    mapping[y] = fy
                    nxt.append(y)
                elif mapping[y] != fy:
                    return None
        frontier = nxt
    if any(v < 0 for v in mapping):
        return None
    return mapping


def _is_homomorphism(g: GroupTable, h: GroupTable, mapping: list[int]) -> bool:
    return all(
        mapping[g.table[i][j]] == h.table[mapping[i]][mapping[j]]
        for i in range(g.order)
        for j in range(g.order)
    )


def automorphism_from_generator_images(
    g: GroupTable, generators: list[int], images: list[int]
) -> Automorphism:
    """The unique automorphism sending each generator to its image.

    Raises GenerationError if the generators do not generate g,
    NotAHomomorphismError if the images are inconsistent with the
    multiplication table, and NotBijectiveError if the extension is a
    proper endomorphism.
    """
    if len(generators) != len(images):
        raise ValueError("generators and images must have equal length")
    if len(_closure(g, list(generators))) != g.order:
        raise GenerationError("the given elements do not generate the group")
    mapping = _extend_by_images(g, g, tuple(generators), tuple(images))
    if mapping is None:
        raise NotAHomomorphismError("generator images do not extend to a homomorphism")
    if not _is_homomorphism(g, g, mapping):
        raise NotAHomomorphismError("extended map does not preserve multiplication")
    if sorted(mapping) != list(range(g.order)):
        raise NotBijectiveError("extended homomorphism is not a bijection")
    return Automorphism(g, tuple(mapping))


def _order_candidates(g: GroupTable, h: GroupTable, gens: tuple[int, ...]) -> list[list[int]]:
    h_orders = [element_order(h, e) for e in range(h.order)]
    return [
        [e for e in range(h.order) if h_orders[e] == element_order(g, gen)]
        for gen in gens
    ]


def are_isomorphic(g: GroupTable, h: GroupTable) -> Isomorphism | None:
    """Search for an isomorphism; None when groups are not isomorphic.

    Generator images are filtered by element order, extended over
    products, and fully verified before being returned.
    """
    if g.order != h.order:
        return None
    if g.table == h.table:
        return Isomorphism(g, h, tuple(range(g.order)))
    g_orders = sorted(element_order(g, e) for e in range(g.order))
    h_orders = sorted(element_order(h, e) for e in range(h.order))
    if g_orders != h_orders or is_abelian(g) != is_abelian(h):
        return None
    gens = generating_set(g)
    for images in itertools.product(*_order_candidates(g, h, gens)):
        mapping = _extend_by_images(g, h, gens, images)
        if mapping is None:
            continue
        if sorted(mapping) != list(range(g.order)):
            continue
        if _is_homomorphism(g, h, mapping):
            return Isomorphism(g, h, tuple(mapping))
    return None


def all_automorphisms(g: GroupTable) -> list[Automorphism]:
    """Every automorphism of g, sorted by mapping for determinism."""
    gens = generating_set(g)
    found: set[tuple[int, ...]] = set()
    for images in itertools.product(*_order_candidates(g, g, gens)):
        mapping = _extend_by_images(g, g, gens, images)
        if mapping is None or sorted(mapping) != list(range(g.order)):
            continue
        if _is_homomorphism(g, g, mapping):
            found.add(tuple(mapping))
    return [Automorphism(g, m) for m in sorted(found)]


def automorphism_table(g: GroupTable) -> tuple[GroupTable, list[Automorphism]]:
    """The automorphism group of g as a table, plus the indexed automorphisms."""
    autos = all_automorphisms(g)
    index = {phi.mapping: i for i, phi in enumerate(autos)}
    n = len(autos)
    table = tuple(
        tuple(index[compose_automorphisms(autos[i], autos[j]).mapping] for j in range(n))
        for i in range(n)
    )
    identity = index[tuple(range(g.order))]
    inverse = _inverses(table, identity)
    name = f"Aut({g.name})" if g.name else ""
    return GroupTable(n, table, identity, inverse, name=name), autos


def all_homomorphisms(g: GroupTable, h: GroupTable) -> list[tuple[int, ...]]:
    """Every homomorphism g -> h (not necessarily injective), sorted."""
    gens = generating_set(g)
    h_orders = [element_order(h, e) for e in range(h.order)]
    candidates = [
        [e for e in range(h.order) if element_order(g, gen) % h_orders[e] == 0]
        for gen in gens
    ]
    found: set[tuple[int, ...]] = set()
    for images in itertools.product(*candidates):
        mapping = _extend_by_images(g, h, gens, images)
        if mapping is not None and _is_homomorphism(g, h, mapping):
            found.add(tuple(mapping))
    return sorted(found)
