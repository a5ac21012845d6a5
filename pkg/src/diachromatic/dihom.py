"""Elementary dihomomorphisms and the interpolation construction.

An elementary dihomomorphism identifies two vertices that do not form a
2-cycle. The merged vertex keeps the label of the second vertex ``v``;
image digraphs are relabelled ``0..n-2`` in increasing order of the
surviving vertices, and :class:`DihomSequence` tracks which original
vertices each image vertex stands for.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .coloring import Coloring, ColoringCertificate
from .digraph import Digraph, adjacent, is_acyclic_mask, mask_of, topological_order
from .solver import dichromatic_number, diachromatic_number


class DihomError(ValueError):
    pass


@dataclass(frozen=True)
class DihomStep:
    """Identify vertex ``u`` into ``v``; indices refer to the digraph the step acts on."""

    u: int
    v: int
    u_label: int
    v_label: int


@dataclass
class DihomSequence:
    source: Digraph
    steps: list[DihomStep] = field(default_factory=list)
    images: list[Digraph] = field(default_factory=list)
    labels: list[list[int]] = field(default_factory=list)

    @property
    def target(self) -> Digraph:
        return self.images[-1]

    def __len__(self) -> int:
        return len(self.steps)


def elementary_image(d: Digraph, u: int, v: int) -> Digraph:
    """Identify the nonadjacent vertices ``u`` and ``v``; the result drops ``u``.

    A one-directional arc between ``u`` and ``v`` disappears, since it
    would become a loop.
    """
    if u == v:
        raise DihomError("cannot identify a vertex with itself")
    if not (0 <= u < d.n and 0 <= v < d.n):
        raise DihomError(f"vertices {u},{v} not in digraph of order {d.n}")
    if adjacent(d, u, v):
        raise DihomError(f"vertices {u} and {v} form a 2-cycle")

    def idx(x: int) -> int:
        return x if x < u else x - 1

    arcs = set()
    for x, y in d.arcs:
        x2 = v if x == u else x
        y2 = v if y == u else y
        if x2 != y2:
            arcs.add((idx(x2), idx(y2)))
    return Digraph(d.n - 1, arcs)


def legal_steps(d: Digraph) -> list[tuple[int, int]]:
    """All pairs ``u < v`` that may be identified."""
    return [
        (u, v) for u in range(d.n) for v in range(u + 1, d.n) if not d.is_symmetric_arc(u, v)
    ]


def image_from_partition(d: Digraph, parts: Sequence[Iterable[int]]) -> Digraph:
    """Quotient of ``d`` by a partition into acyclic sets.

    Image vertex ``i`` stands for ``parts[i]``; there is an arc ``i -> j``
    whenever some arc of ``d`` leaves part ``i`` and enters part ``j``.
    """
    masks = [mask_of(p) for p in parts]
    union = 0
    for i, m in enumerate(masks):
        if not m:
            raise DihomError(f"part {i} is empty")
        if union & m:
            raise DihomError("parts overlap")
        union |= m
        if not is_acyclic_mask(d, m):
            raise DihomError(f"part {i} induces a directed cycle")
    if union != d.full_mask:
        raise DihomError("parts do not cover every vertex")
    where = [0] * d.n
    for i, part in enumerate(parts):
        for x in part:
            where[x] = i
    return Digraph(
        len(masks), {(where[x], where[y]) for x, y in d.arcs if where[x] != where[y]}
    )


def sequence_from_classes(d: Digraph, classes: Sequence[Iterable[int]]) -> DihomSequence:
    """Collapse every acyclic class to one vertex by elementary steps.

    Each class is merged along a topological order of the subdigraph it
    induces: the first vertex is identified into the second, the result
    into the third, and so on. The merged prefix only ever receives arcs
    from later vertices' predecessors, so it never forms a 2-cycle with the
    next vertex in that order.
    """
    seq = DihomSequence(source=d, images=[d], labels=[list(range(d.n))])
    current = d
    labels = list(range(d.n))
    for cls in classes:
        order = topological_order(d, cls)
        for a, b in zip(order, order[1:]):
            u, v = labels.index(a), labels.index(b)
            if adjacent(current, u, v):
                raise AssertionError(f"class merge blocked by a 2-cycle between {a} and {b}")
            current = elementary_image(current, u, v)
            seq.steps.append(DihomStep(u, v, a, b))
            labels = labels[:u] + labels[u + 1:]
            seq.images.append(current)
            seq.labels.append(list(labels))
    return seq


def interpolation_sequence(d: Digraph, certificate: ColoringCertificate | None = None) -> DihomSequence:
    """Sequence of elementary steps from ``d`` to the complete symmetric digraph of order dac(d).

    ``certificate`` may supply a complete acyclic coloring to collapse; by
    default an optimal one is computed.
    """
    if certificate is None:
        coloring: Coloring = diachromatic_number(d).certificate.coloring
    else:
        if not (certificate.acyclic and certificate.complete):
            raise DihomError("certificate must be complete and acyclic")
        coloring = certificate.coloring
    seq = sequence_from_classes(d, coloring.classes())
    k = seq.target.n
    if seq.target.m != k * (k - 1):
        raise AssertionError("collapsed complete coloring is not a complete symmetric digraph")
    return seq


def image_with_dichromatic(d: Digraph, l: int, sequence: DihomSequence | None = None) -> Digraph:
    """A dihomomorphic image of ``d`` whose dichromatic number is exactly ``l``.

    Walks the interpolation sequence and returns the image right after the
    last one whose dichromatic number is still below ``l``.
    """
    seq = interpolation_sequence(d) if sequence is None else sequence
    dc = dichromatic_number(d).value
    dac = seq.target.n
    if not dc <= l <= dac:
        raise DihomError(f"l={l} outside [dc, dac] = [{dc}, {dac}]")
    if dc == l:
        return d
    values = [dichromatic_number(img).value for img in seq.images]
    j = max(i for i in range(len(values) - 1) if values[i] < l)
    found = seq.images[j + 1]
    if values[j + 1] != l:
        raise AssertionError("dichromatic number jumped by more than one in a single step")
    return found
