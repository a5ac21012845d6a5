"""Digraph families, their explicit complete colorings, and discordant subtournaments."""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations
from math import log2

from .coloring import Coloring, ColoringCertificate, Witness, certify, is_complete_coloring
from .digraph import (
    Digraph,
    bits,
    induced,
    is_acyclic_mask,
    is_tournament,
    mask_of,
    topological_order,
)
from .solver import extend_greedily, size_bound

Seed = int | random.Random | None


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


# -- generators --------------------------------------------------------------


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant tournament on Z_{2m+1}; ``jumps`` holds one of {j, -j} for each j."""

    m: int
    jumps: frozenset[int]

    def __init__(self, m: int, jumps: Iterable[int]):
        if m < 1:
            raise ValueError("circulant tournaments need m >= 1")
        order = 2 * m + 1
        js = frozenset(j % order for j in jumps)
        if 0 in js:
            raise ValueError("jump set must not contain 0")
        for j in range(1, m + 1):
            present = (j in js) + ((order - j) in js)
            if present != 1:
                raise ValueError(f"jump set must contain exactly one of {j} and {-j} mod {order}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "jumps", js)

    @property
    def order(self) -> int:
        return 2 * self.m + 1


def circulant_tournament(spec: CirculantSpec) -> Digraph:
    n = spec.order
    return Digraph(n, ((i, (i + j) % n) for i in range(n) for j in spec.jumps))


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def oriented_matching(m: int) -> Digraph:
    """``m`` disjoint arcs ``2i -> 2i+1``."""
    return Digraph(2 * m, ((2 * i, 2 * i + 1) for i in range(m)))


def complete_symmetric(k: int) -> Digraph:
    return Digraph(k, ((i, j) for i in range(k) for j in range(k) if i != j))


def random_tournament(n: int, seed: Seed = None) -> Digraph:
    """Each pair ``u < v`` is oriented by one fair draw, pairs in lexicographic order."""
    rng = _rng(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def random_digraph(n: int, p: float, seed: Seed = None) -> Digraph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"arc probability must lie in [0, 1], got {p}")
    rng = _rng(seed)
    return Digraph(
        n, ((u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p)
    )


# -- constructive colorings --------------------------------------------------


def matching_coloring(m: int) -> ColoringCertificate:
    """Complete acyclic coloring of ``oriented_matching(m)`` with the size-bound number of colors.

    Arcs are grouped in blocks of ``k-1``; the tails of block ``l`` get color
    ``l`` and its heads get the other ``k-1`` colors, one each. Arcs past
    ``k(k-1)`` copy the colors of earlier arcs.
    """
    if m < 1:
        raise ValueError("matching coloring needs m >= 1")
    k = size_bound(m)
    base: list[tuple[int, int]] = []
    for l in range(1, k + 1):
        base.extend((l, c) for c in range(1, k + 1) if c != l)
    colors = []
    for i in range(m):
        tail, head = base[i % len(base)] if base else (1, 1)
        colors += [tail, head]
    return certify(oriented_matching(m), Coloring(colors), Witness.DAC_LOWER)


def circulant_coloring(spec: CirculantSpec) -> ColoringCertificate:
    """Pair vertex ``i`` with ``-i``; vertex 0 is alone. Uses ``m+1`` colors."""
    n = spec.order
    colors = [1] + [min(i, n - i) + 1 for i in range(1, n)]
    return certify(circulant_tournament(spec), Coloring(colors), Witness.DAC_LOWER)


def transitive_coloring(n: int) -> ColoringCertificate:
    """Pair the i-th vertex of the acyclic order with the i-th from the end."""
    if n < 1:
        raise ValueError("transitive coloring needs n >= 1")
    colors = [min(i, n - 1 - i) + 1 for i in range(n)]
    return certify(transitive_tournament(n), Coloring(colors), Witness.DAC_LOWER)


def _transitive_order(d: Digraph, vertices: Iterable[int]) -> list[int]:
    sub, labels = induced(d, vertices)
    if not is_tournament(sub):
        raise ValueError(f"vertices {labels} do not induce a tournament")
    try:
        return [labels[i] for i in topological_order(sub)]
    except ValueError:
        raise ValueError(f"vertices {labels} induce a cyclic tournament") from None


def two_transitive_coloring(d: Digraph, r_set: Iterable[int], s_set: Iterable[int]) -> ColoringCertificate:
    """Complete coloring from two disjoint transitive subtournaments.

    With ``r <= s`` and ``k = (s - r) // 2`` it uses ``r + k`` colors on the
    two subtournaments, then colors all other vertices greedily.
    """
    xs, ys = sorted(set(r_set)), sorted(set(s_set))
    if not xs or not ys:
        raise ValueError("both transitive subtournaments must be nonempty")
    if set(xs) & set(ys):
        raise ValueError("the two vertex sets must be disjoint")
    x = _transitive_order(d, xs)
    y = _transitive_order(d, ys)
    if len(x) > len(y):
        x, y = y, x
    r, s = len(x), len(y)
    k = (s - r) // 2
    colors = [0] * d.n
    # 1-based indices x_i, y_i as in the construction
    for i in range(1, r + 1):
        colors[x[i - 1]] = i
        colors[y[k + r + 1 - i - 1]] = i
    for i in range(r + 1, r + k + 1):
        colors[y[k + i - 1]] = i
        colors[y[k + r + 1 - i - 1]] = i
    colors = extend_greedily(d, colors)
    return certify(d, Coloring(colors))


# -- discordant subtournaments -----------------------------------------------


@dataclass(frozen=True)
class DiscordantResult:
    vertices: frozenset[int]
    acyclic_order: tuple[int, ...]
    anchor_arc: tuple[int, int]
    c3: int
    tt_star: int
    notes: tuple[str, ...] = field(default=())

    @property
    def anchor_score(self) -> int:
        return self.c3 + self.tt_star


def arc_scores(t: Digraph, within: int | None = None) -> dict[tuple[int, int], tuple[int, int]]:
    """For each arc ``xy``: (directed triangles through it, transitive triangles with source x, sink y).

    ``within`` restricts everything to the subtournament induced by that bitmask.
    """
    mask = t.full_mask if within is None else within
    out, inn = t.out_mask, t.in_mask
    return {
        (x, y): ((out[y] & inn[x] & mask).bit_count(), (out[x] & inn[y] & mask).bit_count())
        for x in bits(mask)
        for y in bits(out[x] & mask)
    }


def is_discordant(t: Digraph, vertices: Iterable[int], within: int | None = None) -> bool:
    """Transitive, and every outside vertex both sends an arc into and receives one from the set."""
    mask = mask_of(vertices)
    outside = (t.full_mask if within is None else within) & ~mask
    if not mask or not is_acyclic_mask(t, mask):
        return False
    return all(t.out_mask[x] & mask and t.in_mask[x] & mask for x in bits(outside))


def discordant_bound(n: int) -> float:
    return 2 * log2((2 * n + 2) / 3)


def _argmax(candidates: int, key) -> int:
    best, best_val = -1, -1
    for v in bits(candidates):
        val = key(v)
        if val > best_val:
            best, best_val = v, val
    return best


def discordant_subtournament(t: Digraph, within: int | None = None) -> DiscordantResult:
    """Small discordant transitive subtournament by anchored peeling.

    Pick the arc ``x0 -> y0`` lying in the most directed plus source-sink
    transitive triangles. Among common out-neighbours, repeatedly take a
    vertex of maximum in-degree and discard its closed in-neighbourhood;
    among common in-neighbours that dominate everything chosen so far, do
    the same with out-degrees. Ties go to the least vertex or arc.

    ``within`` (a bitmask) runs the construction on that induced
    subtournament without relabelling.
    """
    mask = t.full_mask if within is None else within
    if mask.bit_count() < 3:
        raise ValueError("discordant subtournaments need n >= 3")
    if within is None and not is_tournament(t):
        raise ValueError("input is not a tournament")
    out, inn = t.out_mask, t.in_mask
    scores = arc_scores(t, mask)
    anchor = max(sorted(scores), key=lambda a: (sum(scores[a]), -a[0], -a[1]))
    x0, y0 = anchor
    c3, tt = scores[anchor]

    zs: list[int] = []
    pool = out[x0] & out[y0] & mask
    while pool:
        z = _argmax(pool, lambda v, pool=pool: (inn[v] & pool).bit_count())
        zs.append(z)
        pool &= ~(inn[z] | 1 << z)

    chosen = mask_of([x0, y0, *zs])
    ws: list[int] = []
    pool = 0
    for w in bits(inn[x0] & inn[y0] & mask):
        if out[w] & chosen == chosen:
            pool |= 1 << w
    while pool:
        w = _argmax(pool, lambda v, pool=pool: (out[v] & pool).bit_count())
        ws.append(w)
        pool &= ~(out[w] | 1 << w)

    order = [*reversed(ws), x0, y0, *zs]
    notes: list[str] = []
    vertices = set(order)
    # the construction guarantees discordance; the repair below never fires on tournaments
    while not is_discordant(t, vertices, mask):
        vmask = mask_of(vertices)
        for x in bits(mask & ~vmask):
            if not (out[x] & vmask and inn[x] & vmask):
                if not is_acyclic_mask(t, vmask | 1 << x):
                    raise AssertionError(f"cannot repair discordance at vertex {x}")
                vertices.add(x)
                notes.append(f"added uncovered vertex {x}")
                break
    if notes:
        order = topological_order(t, vertices)
    return DiscordantResult(frozenset(vertices), tuple(order), anchor, c3, tt, tuple(notes))


def xi2_exact(t: Digraph) -> int:
    """Minimum order of a discordant subtournament, by subset enumeration."""
    if not is_tournament(t):
        raise ValueError("input is not a tournament")
    for size in range(1, t.n + 1):
        for sub in combinations(range(t.n), size):
            if is_discordant(t, sub):
                return size
    raise AssertionError("the whole vertex set is discordant for a transitive tournament")


def discordant_partition_coloring(t: Digraph) -> ColoringCertificate:
    """Complete acyclic coloring whose classes are successive discordant subtournaments.

    Each class is extracted from the tournament left after removing the
    earlier classes, until at most two vertices remain; those form the last
    class.
    """
    if not is_tournament(t):
        raise ValueError("input is not a tournament")
    residual = t.full_mask
    classes: list[list[int]] = []
    while residual.bit_count() >= 3:
        res = discordant_subtournament(t, residual)
        classes.append(sorted(res.vertices))
        residual &= ~mask_of(res.vertices)
    if residual:
        classes.append(list(bits(residual)))
    coloring = Coloring.from_classes(t.n, classes)
    notes = []
    while not is_complete_coloring(t, coloring) and coloring.k > 1:
        classes[-2] = classes[-2] + classes.pop()
        coloring = Coloring.from_classes(t.n, classes)
        notes.append("merged last two classes")
    return certify(t, coloring, notes=notes)
