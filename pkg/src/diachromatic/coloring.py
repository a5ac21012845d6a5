"""Vertex colorings and the acyclic / complete predicates."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path

from .digraph import Digraph, is_acyclic_mask


class InvalidColoring(ValueError):
    pass


class Coloring:
    """A surjective map from vertices ``0..n-1`` onto colors ``1..k``."""

    def __init__(self, colors: Iterable[int]):
        colors = tuple(int(c) for c in colors)
        k = max(colors, default=0)
        used = set(colors)
        if used != set(range(1, k + 1)):
            missing = sorted(set(range(1, k + 1)) - used)
            bad = sorted(c for c in used if c < 1)
            if bad:
                raise InvalidColoring(f"colors must be positive, got {bad}")
            raise InvalidColoring(f"coloring is not surjective onto 1..{k}; unused {missing}")
        self.colors: tuple[int, ...] = colors
        self.k = k

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]]) -> Coloring:
        colors = [0] * n
        for i, cls_ in enumerate(classes, start=1):
            for v in cls_:
                if colors[v]:
                    raise InvalidColoring(f"vertex {v} appears in two classes")
                colors[v] = i
        if 0 in colors:
            raise InvalidColoring(f"vertex {colors.index(0)} is uncoloured")
        return cls(colors)

    @property
    def n(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.colors == other.colors

    def __hash__(self) -> int:
        return hash(self.colors)

    def __repr__(self) -> str:
        return f"Coloring({list(self.colors)})"

    @cached_property
    def class_masks(self) -> tuple[int, ...]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c - 1] |= 1 << v
        return tuple(masks)

    def classes(self) -> list[frozenset[int]]:
        out: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].add(v)
        return [frozenset(s) for s in out]

    def normalized(self) -> Coloring:
        """Relabel colors in order of first appearance."""
        relabel: dict[int, int] = {}
        for c in self.colors:
            relabel.setdefault(c, len(relabel) + 1)
        return Coloring(relabel[c] for c in self.colors)


def chromatic_classes(c: Coloring) -> list[frozenset[int]]:
    return c.classes()


def _check_domain(d: Digraph, c: Coloring) -> None:
    if c.n != d.n:
        raise InvalidColoring(f"coloring covers {c.n} vertices, digraph has {d.n}")


def is_acyclic_coloring(d: Digraph, c: Coloring) -> bool:
    _check_domain(d, c)
    return all(is_acyclic_mask(d, mask) for mask in c.class_masks)


def missing_pairs(d: Digraph, c: Coloring) -> list[tuple[int, int]]:
    """Ordered color pairs ``(i, j)``, ``i != j``, with no arc from class i to class j."""
    _check_domain(d, c)
    k = c.k
    seen = [[False] * (k + 1) for _ in range(k + 1)]
    for u, v in d.arcs:
        seen[c.colors[u]][c.colors[v]] = True
    return [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i != j and not seen[i][j]]


def is_complete_coloring(d: Digraph, c: Coloring) -> bool:
    return not missing_pairs(d, c)


class Witness(str, Enum):
    DC_UPPER = "dc-upper"
    DAC_LOWER = "dac-lower"
    PSI_LOWER = "psi-lower"
    NONE = "none"


@dataclass(frozen=True)
class ColoringCertificate:
    """A coloring of ``digraph`` together with its verified flags."""

    digraph: Digraph
    coloring: Coloring
    acyclic: bool
    complete: bool
    witnesses: Witness = Witness.NONE
    notes: tuple[str, ...] = field(default=())

    @property
    def k(self) -> int:
        return self.coloring.k

    def recheck(self) -> bool:
        """True when the stored flags agree with a fresh evaluation."""
        return (
            is_acyclic_coloring(self.digraph, self.coloring) == self.acyclic
            and is_complete_coloring(self.digraph, self.coloring) == self.complete
        )


def certify(
    d: Digraph, c: Coloring, witnesses: Witness | None = None, notes: Iterable[str] = ()
) -> ColoringCertificate:
    """Evaluate both predicates and package the result.

    When ``witnesses`` is omitted the strongest parameter the flags support
    is recorded: complete+acyclic witnesses a lower bound on dac, complete
    alone a lower bound on psi, acyclic alone an upper bound on dc.
    """
    acyclic = is_acyclic_coloring(d, c)
    complete = is_complete_coloring(d, c)
    if witnesses is None:
        if acyclic and complete:
            witnesses = Witness.DAC_LOWER
        elif complete:
            witnesses = Witness.PSI_LOWER
        elif acyclic:
            witnesses = Witness.DC_UPPER
        else:
            witnesses = Witness.NONE
    return ColoringCertificate(d, c, acyclic, complete, Witness(witnesses), tuple(notes))


# -- "v c" line format -------------------------------------------------------


def format_coloring(c: Coloring) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c.colors))


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    """Parse ``v c`` lines (``#`` comments allowed); every vertex must appear once."""
    assignment: dict[int, int] = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidColoring(f"line {no}: expected 'v c', got {line!r}")
        try:
            v, col = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidColoring(f"line {no}: non-integer entry in {line!r}") from None
        if v in assignment:
            raise InvalidColoring(f"line {no}: vertex {v} coloured twice")
        assignment[v] = col
    size = len(assignment) if n is None else n
    if sorted(assignment) != list(range(size)):
        raise InvalidColoring(f"coloring must assign every vertex 0..{size - 1} exactly once")
    return Coloring(assignment[v] for v in range(size))


def read_coloring(path: str | Path, n: int | None = None) -> Coloring:
    return parse_coloring(Path(path).read_text(), n)
