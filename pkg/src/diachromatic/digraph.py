"""Immutable digraphs on vertices ``0..n-1`` with bitmask adjacency.

Every vertex set handed out by this module is a ``frozenset`` of ints;
internally, neighbourhoods are kept as int bitmasks so that solver code
can do class-membership tests with a single ``&``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

Arc = tuple[int, int]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    """A loopless digraph without parallel arcs.

    Instances are immutable and hashable; structural operations return new
    digraphs.
    """

    __slots__ = ("n", "arcs", "out_mask", "in_mask", "_hash")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        arc_set = set()
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in arcs:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop ({u},{u}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) has an endpoint outside 0..{n - 1}")
            arc_set.add((u, v))
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        self.n = n
        self.arcs: frozenset[Arc] = frozenset(arc_set)
        self.out_mask: tuple[int, ...] = tuple(out_mask)
        self.in_mask: tuple[int, ...] = tuple(in_mask)
        self._hash = hash((n, self.arcs))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.out_mask[v]))

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.in_mask[v]))

    def out_degree(self, v: int, within: int | None = None) -> int:
        mask = self.out_mask[v] if within is None else self.out_mask[v] & within
        return mask.bit_count()

    def in_degree(self, v: int, within: int | None = None) -> int:
        mask = self.in_mask[v] if within is None else self.in_mask[v] & within
        return mask.bit_count()

    def is_symmetric_arc(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) and self.has_arc(v, u)

    def is_asymmetric(self) -> bool:
        """True when no arc has its reverse, i.e. there is no 2-cycle."""
        return all(not self.has_arc(v, u) for u, v in self.arcs)


def from_arcs(n: int, arcs: Iterable[Arc]) -> Digraph:
    return Digraph(n, arcs)


def edgeless(n: int) -> Digraph:
    return Digraph(n)


def converse(d: Digraph) -> Digraph:
    return Digraph(d.n, ((v, u) for u, v in d.arcs))


def complement(d: Digraph) -> Digraph:
    return Digraph(
        d.n,
        ((u, v) for u in range(d.n) for v in range(d.n) if u != v and not d.has_arc(u, v)),
    )


def adjacent(d: Digraph, u: int, v: int) -> bool:
    """Adjacency in the 2-cycle sense: both ``(u,v)`` and ``(v,u)`` are arcs."""
    if u == v:
        raise ValueError("adjacency is defined for distinct vertices")
    return d.is_symmetric_arc(u, v)


def is_tournament(d: Digraph) -> bool:
    full = d.full_mask
    return all(
        not d.out_mask[v] & d.in_mask[v] and d.out_mask[v] | d.in_mask[v] == full & ~(1 << v)
        for v in range(d.n)
    )


def underlying_graph_edges(d: Digraph) -> set[frozenset[int]]:
    return {frozenset(a) for a in d.arcs}


def reaches_within(d: Digraph, sources: int, within: int) -> int:
    """Bitmask of vertices of ``within`` reachable from ``sources`` by paths inside ``within``."""
    seen = sources & within
    frontier = seen
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= d.out_mask[w]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_acyclic_mask(d: Digraph, mask: int) -> bool:
    """Kahn's algorithm on the subdigraph induced by ``mask``."""
    remaining = mask
    while remaining:
        sources = 0
        for v in bits(remaining):
            if not d.in_mask[v] & remaining:
                sources |= 1 << v
        if not sources:
            return False
        remaining &= ~sources
    return True


def is_acyclic(d: Digraph) -> bool:
    return is_acyclic_mask(d, d.full_mask)


def topological_order(d: Digraph, vertices: Iterable[int] | None = None) -> list[int]:
    """Least-index-first topological order of the (induced) digraph.

    Raises ``ValueError`` when the induced subdigraph has a directed cycle.
    """
    remaining = d.full_mask if vertices is None else mask_of(vertices)
    order: list[int] = []
    while remaining:
        for v in bits(remaining):
            if not d.in_mask[v] & remaining:
                break
        else:
            raise ValueError("subdigraph contains a directed cycle")
        order.append(v)
        remaining &= ~(1 << v)
    return order


def induced(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Induced subdigraph on ``vertices``, relabelled ``0..|S|-1`` in increasing order.

    Returns the digraph and the list mapping new labels to the old ones.
    """
    labels = sorted(set(vertices))
    for v in labels:
        if not 0 <= v < d.n:
            raise ValueError(f"vertex {v} not in digraph of order {d.n}")
    index = {v: i for i, v in enumerate(labels)}
    arcs = [(index[u], index[v]) for u, v in d.arcs if u in index and v in index]
    return Digraph(len(labels), arcs), labels


def remove_vertex(d: Digraph, u: int) -> Digraph:
    if not 0 <= u < d.n:
        raise ValueError(f"vertex {u} not in digraph of order {d.n}")
    return induced(d, (v for v in range(d.n) if v != u))[0]


def remove_arc(d: Digraph, arc: Arc) -> Digraph:
    arc = (int(arc[0]), int(arc[1]))
    if arc not in d.arcs:
        raise ValueError(f"arc {arc} not in digraph")
    return Digraph(d.n, d.arcs - {arc})


def strong_components(d: Digraph) -> list[frozenset[int]]:
    """Strong components, listed in a topological order of the condensation.

    Iterative Tarjan; Tarjan emits components in reverse topological order,
    so the result is reversed before returning.
    """
    index_of = [-1] * d.n
    low = [0] * d.n
    on_stack = [False] * d.n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    succ = [list(bits(d.out_mask[v])) for v in range(d.n)]

    for root in range(d.n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        index_of[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index_of[w] == -1:
                    index_of[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index_of[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    comps.reverse()
    return comps


def condensation(d: Digraph) -> tuple[Digraph, list[frozenset[int]]]:
    """Quotient by strong components; vertex ``i`` is ``components[i]``."""
    comps = strong_components(d)
    where = {}
    for i, comp in enumerate(comps):
        for v in comp:
            where[v] = i
    arcs = {(where[u], where[v]) for u, v in d.arcs if where[u] != where[v]}
    return Digraph(len(comps), arcs), comps


# -- DGR text format ---------------------------------------------------------


class DGRFormatError(ValueError):
    pass


def parse_dgr(text: str) -> Digraph:
    """Parse DGR text: first data line ``n``, then one ``u v`` arc per line.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise DGRFormatError("empty DGR input: missing vertex count")
    no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise DGRFormatError(f"line {no}: expected vertex count, got {head!r}") from None
    arcs = []
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise DGRFormatError(f"line {no}: expected 'u v', got {line!r}")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise DGRFormatError(f"line {no}: non-integer endpoint in {line!r}") from None
    try:
        return Digraph(n, arcs)
    except ValueError as exc:
        raise DGRFormatError(str(exc)) from None


def format_dgr(d: Digraph) -> str:
    out = [str(d.n)]
    out.extend(f"{u} {v}" for u, v in d.sorted_arcs())
    return "\n".join(out) + "\n"


def read_dgr(path: str | Path) -> Digraph:
    return parse_dgr(Path(path).read_text())


def write_dgr(d: Digraph, path: str | Path) -> None:
    Path(path).write_text(format_dgr(d))
