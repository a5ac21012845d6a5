"""Exact dichromatic, diachromatic and pseudoachromatic numbers.

All three parameters are computed by one backtracking engine over set
partitions of the vertex set. Vertices are placed in input order; vertex
``v`` may join any open class or open the next one, which enumerates each
partition exactly once. Two prunes are maintained incrementally:

* acyclic mode rejects a placement that closes a directed cycle inside a
  class (a reachability test on the class bitmask);
* complete mode tracks which ordered class pairs already carry an arc and
  abandons a branch once the uncovered pairs outnumber the arcs that still
  have an unplaced endpoint, since each such arc covers at most one pair.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt

from .coloring import Coloring, ColoringCertificate, Witness, certify
from .digraph import Digraph, bits, is_acyclic, reaches_within, remove_arc

log = logging.getLogger(__name__)

SOLVER_CEILING = 12


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: ColoringCertificate
    nodes_explored: int


class _Abort(Exception):
    pass


class _Search:
    """Depth-first search for a coloring with ``k`` classes.

    ``exact`` asks for exactly ``k`` nonempty classes, otherwise at most ``k``.
    """

    def __init__(self, d: Digraph, k: int, *, acyclic: bool, complete: bool, exact: bool):
        self.d = d
        self.n = d.n
        self.k = k
        self.acyclic = acyclic
        self.complete = complete
        self.exact = exact
        self.nodes = 0
        # arcs[p] = number of arcs with at least one endpoint at position >= p
        self.open_arcs = [0] * (self.n + 1)
        for u, v in d.arcs:
            self.open_arcs[max(u, v)] += 1
        for p in range(self.n - 1, -1, -1):
            self.open_arcs[p] += self.open_arcs[p + 1]
        self.earlier_out = [d.out_mask[v] & ((1 << v) - 1) for v in range(self.n)]
        self.earlier_in = [d.in_mask[v] & ((1 << v) - 1) for v in range(self.n)]
        self.should_abort = None

    def run(self, prefix: Sequence[int] = ()) -> list[int] | None:
        k = self.k
        self.colors = [0] * self.n
        self.masks = [0] * k
        self.opened = 0
        self.cover = [[0] * k for _ in range(k)]
        self.covered = 0
        for v, c in enumerate(prefix):
            if not self._place(v, c):
                return None
        if not self._feasible(len(prefix)):
            return None
        try:
            if self._extend(len(prefix)):
                return [c + 1 for c in self.colors]
        except _Abort:
            return None
        return None

    def _place(self, v: int, c: int) -> bool:
        """Put ``v`` in class ``c`` if the acyclic constraint allows it."""
        d = self.d
        cls = self.masks[c]
        if self.acyclic and cls:
            start = d.out_mask[v] & cls
            if start and reaches_within(d, start, cls) & d.in_mask[v]:
                return False
        self.masks[c] = cls | (1 << v)
        self.colors[v] = c
        if c == self.opened:
            self.opened += 1
        if self.complete:
            cover = self.cover
            colors = self.colors
            for w in bits(self.earlier_out[v]):
                cw = colors[w]
                if cw != c:
                    if cover[c][cw] == 0:
                        self.covered += 1
                    cover[c][cw] += 1
            for w in bits(self.earlier_in[v]):
                cw = colors[w]
                if cw != c:
                    if cover[cw][c] == 0:
                        self.covered += 1
                    cover[cw][c] += 1
        return True

    def _unplace(self, v: int, c: int) -> None:
        self.masks[c] &= ~(1 << v)
        if not self.masks[c]:
            self.opened -= 1
        if self.complete:
            cover = self.cover
            colors = self.colors
            for w in bits(self.earlier_out[v]):
                cw = colors[w]
                if cw != c:
                    cover[c][cw] -= 1
                    if cover[c][cw] == 0:
                        self.covered -= 1
            for w in bits(self.earlier_in[v]):
                cw = colors[w]
                if cw != c:
                    cover[cw][c] -= 1
                    if cover[cw][c] == 0:
                        self.covered -= 1

    def _feasible(self, placed: int) -> bool:
        remaining = self.n - placed
        if self.exact and self.opened + remaining < self.k:
            return False
        if self.complete:
            needed = self.k * (self.k - 1) - self.covered
            if needed > self.open_arcs[placed]:
                return False
        return True

    def _extend(self, p: int) -> bool:
        if p == self.n:
            return not self.exact or self.opened == self.k
        self.nodes += 1
        if self.should_abort is not None and self.nodes & 0x3FF == 0 and self.should_abort():
            raise _Abort
        limit = min(self.opened + 1, self.k)
        for c in range(limit):
            if not self._place(p, c):
                continue
            if self._feasible(p + 1) and self._extend(p + 1):
                return True
            self._unplace(p, c)
        return False


def _prefixes(d: Digraph, k: int, depth: int) -> list[list[int]]:
    """Canonical class assignments of the first ``depth`` vertices."""
    out: list[list[int]] = [[]]
    for v in range(min(depth, d.n)):
        grown = []
        for pre in out:
            for c in range(min(max(pre, default=-1) + 2, k)):
                grown.append(pre + [c])
        out = grown
    return out


def find_coloring(
    d: Digraph,
    k: int,
    *,
    acyclic: bool,
    complete: bool,
    exact: bool = True,
    workers: int = 1,
) -> tuple[Coloring | None, int]:
    """Search for a coloring with ``k`` classes under the given constraints.

    Returns the coloring (or ``None``) and the number of search nodes. With
    ``workers > 1`` the top of the search tree is split into independent
    subtrees evaluated on a thread pool; the subtree with the lowest index
    that succeeds supplies the coloring, so the result does not depend on
    the number of workers.
    """
    if k < 1 or k > d.n:
        return None, 0
    if workers <= 1 or d.n < 4:
        s = _Search(d, k, acyclic=acyclic, complete=complete, exact=exact)
        colors = s.run()
        return (Coloring(colors) if colors else None), s.nodes

    prefixes = _prefixes(d, k, min(d.n - 1, 3))
    best = [len(prefixes)]
    lock = threading.Lock()
    node_counts = [0] * len(prefixes)

    def solve(i: int) -> list[int] | None:
        if i > best[0]:
            return None
        s = _Search(d, k, acyclic=acyclic, complete=complete, exact=exact)
        s.should_abort = lambda: i > best[0]
        colors = s.run(prefixes[i])
        node_counts[i] = s.nodes
        if colors is not None:
            with lock:
                best[0] = min(best[0], i)
        return colors

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(solve, range(len(prefixes))))
    for colors in results:
        if colors is not None:
            return Coloring(colors), sum(node_counts)
    return None, sum(node_counts)


def size_bound(m: int) -> int:
    """Largest k with k(k-1) <= m, i.e. floor((1 + sqrt(1 + 4m)) / 2)."""
    return (1 + isqrt(1 + 4 * m)) // 2


def _warn_ceiling(d: Digraph) -> None:
    if d.n > SOLVER_CEILING:
        log.debug("exact solve on n=%d exceeds the practical ceiling of %d", d.n, SOLVER_CEILING)


def dichromatic_number(d: Digraph, *, workers: int = 1) -> SolveResult:
    if d.n < 1:
        raise ValueError("dichromatic number needs at least one vertex")
    _warn_ceiling(d)
    nodes = 0
    if is_acyclic(d):
        return SolveResult(1, certify(d, Coloring([1] * d.n), Witness.DC_UPPER), 0)
    for k in range(2, d.n + 1):
        col, explored = find_coloring(d, k, acyclic=True, complete=False, exact=False, workers=workers)
        nodes += explored
        if col is not None:
            return SolveResult(col.k, certify(d, col, Witness.DC_UPPER), nodes)
    raise AssertionError("the all-singletons coloring is always acyclic")


def dac_upper_bound(d: Digraph, dc: int | None = None) -> int:
    """Least of the size bound, ceil(n/2) for asymmetric digraphs, and (dc+n)/2."""
    bound = min(d.n, size_bound(d.m))
    if d.is_asymmetric():
        bound = min(bound, (d.n + 1) // 2)
    if dc is not None:
        bound = min(bound, (dc + d.n) // 2)
    return max(bound, 1)


def psi_upper_bound(d: Digraph) -> int:
    bound = min(d.n, size_bound(d.m))
    if d.is_asymmetric():
        bound = min(bound, (d.n + 1) // 2)
    return max(bound, 1)


def diachromatic_number(d: Digraph, *, workers: int = 1) -> SolveResult:
    if d.n < 1:
        raise ValueError("diachromatic number needs at least one vertex")
    _warn_ceiling(d)
    dc = dichromatic_number(d, workers=workers)
    nodes = dc.nodes_explored
    for k in range(dac_upper_bound(d, dc.value), dc.value, -1):
        col, explored = find_coloring(d, k, acyclic=True, complete=True, workers=workers)
        nodes += explored
        if col is not None:
            return SolveResult(k, certify(d, col, Witness.DAC_LOWER), nodes)
    # an acyclic coloring with dc colors is complete
    cert = dc.certificate
    return SolveResult(dc.value, certify(d, cert.coloring, Witness.DAC_LOWER), nodes)


def pseudoachromatic_number(d: Digraph, *, workers: int = 1) -> SolveResult:
    if d.n < 1:
        raise ValueError("pseudoachromatic number needs at least one vertex")
    _warn_ceiling(d)
    nodes = 0
    for k in range(psi_upper_bound(d), 0, -1):
        col, explored = find_coloring(d, k, acyclic=False, complete=True, workers=workers)
        nodes += explored
        if col is not None:
            return SolveResult(k, certify(d, col, Witness.PSI_LOWER), nodes)
    raise AssertionError("the one-class coloring is always complete")


def complete_l_coloring(d: Digraph, l: int, *, workers: int = 1) -> ColoringCertificate | None:
    """A complete acyclic coloring with exactly ``l`` colors, or ``None``.

    ``None`` is an answer, not a failure: such a coloring exists exactly
    when dc(D) <= l <= dac(D).
    """
    if l < 1:
        raise ValueError("color count must be positive")
    col, _ = find_coloring(d, l, acyclic=True, complete=True, workers=workers)
    if col is None:
        return None
    return certify(d, col, Witness.DAC_LOWER)


def greedy_coloring(d: Digraph, order: Sequence[int] | None = None) -> ColoringCertificate:
    """Greedy complete acyclic coloring along ``order`` (default ``0..n-1``).

    Each vertex joins the least-indexed class in which it would have no
    out-neighbour or no in-neighbour; otherwise it opens a new class.
    """
    order = list(range(d.n)) if order is None else [int(v) for v in order]
    if sorted(order) != list(range(d.n)):
        raise ValueError("order must be a permutation of the vertices")
    colors = [0] * d.n
    classes: list[int] = []
    for v in order:
        for i, cls in enumerate(classes):
            if not d.out_mask[v] & cls or not d.in_mask[v] & cls:
                classes[i] |= 1 << v
                colors[v] = i + 1
                break
        else:
            classes.append(1 << v)
            colors[v] = len(classes)
    return certify(d, Coloring(colors))


def extend_greedily(d: Digraph, colors: Sequence[int], order: Sequence[int] | None = None) -> list[int]:
    """Complete a partial coloring (0 = uncoloured) with the greedy rule.

    Classes already present are treated as the initial chromatic classes;
    uncoloured vertices are processed in ``order`` (default increasing).
    """
    colors = list(colors)
    k = max(colors, default=0)
    classes = [0] * k
    for v, c in enumerate(colors):
        if c:
            classes[c - 1] |= 1 << v
    pending = [v for v in (order if order is not None else range(d.n)) if not colors[v]]
    for v in pending:
        for i, cls in enumerate(classes):
            if not d.out_mask[v] & cls or not d.in_mask[v] & cls:
                classes[i] |= 1 << v
                colors[v] = i + 1
                break
        else:
            classes.append(1 << v)
            colors[v] = len(classes)
    return colors


def is_k_minimal(d: Digraph) -> bool:
    """True when deleting any single arc lowers the diachromatic number."""
    k = diachromatic_number(d).value
    return all(diachromatic_number(remove_arc(d, f)).value < k for f in d.sorted_arcs())


def is_k_minimal_by_size(d: Digraph) -> bool:
    k = diachromatic_number(d).value
    return d.m == k * (k - 1)
