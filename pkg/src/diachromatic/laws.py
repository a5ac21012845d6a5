"""Batch checks of the parameter inequalities over corpora of digraphs.

Every law is a function ``check_<name>(corpus) -> LawReport``. A law that
does not apply to an instance (wrong order, not a tournament, ...) skips
it; violations never abort a run. All comparisons are done in integer
arithmetic except the logarithmic tournament bound, which carries a
``LOG_SLACK`` on its right-hand side.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from math import log2
from pathlib import Path

from .coloring import Coloring, is_acyclic_coloring
from .digraph import (
    Digraph,
    bits,
    complement,
    converse,
    is_acyclic,
    is_tournament,
    read_dgr,
    remove_arc,
    remove_vertex,
    strong_components,
)
from .dihom import elementary_image, image_with_dichromatic, interpolation_sequence, legal_steps
from .solver import (
    complete_l_coloring,
    diachromatic_number,
    dichromatic_number,
    greedy_coloring,
    is_k_minimal,
    pseudoachromatic_number,
    size_bound,
)

LOG_SLACK = 1e-9
COMPLEMENT_MAX_N = 7


# -- cached parameter values -------------------------------------------------


@lru_cache(maxsize=1 << 18)
def dc(d: Digraph) -> int:
    return dichromatic_number(d).value


@lru_cache(maxsize=1 << 18)
def dac(d: Digraph) -> int:
    return diachromatic_number(d).value


@lru_cache(maxsize=1 << 18)
def psi(d: Digraph) -> int:
    return pseudoachromatic_number(d).value


# -- corpora -----------------------------------------------------------------


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every labelled digraph of order ``n`` (2^(n(n-1)) of them)."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(pairs)):
        yield Digraph(n, (pairs[i] for i in bits(mask)))


def all_tournaments(n: int) -> Iterator[Digraph]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Digraph(n, ((v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(pairs)))


def exhaustive_corpus(max_n: int, min_n: int = 1) -> list[Digraph]:
    return [d for n in range(min_n, max_n + 1) for d in all_digraphs(n)]


def random_corpus(max_n: int, count: int, seed: int) -> list[Digraph]:
    """``count`` digraphs with order uniform in 1..max_n and arc density uniform in [0, 1]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.random()
        out.append(
            Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p))
        )
    return out


def random_tournament_corpus(max_n: int, count: int, seed: int, min_n: int = 3) -> list[Digraph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        out.append(
            Digraph(
                n,
                ((u, v) if rng.random() < 0.5 else (v, u) for u in range(n) for v in range(u + 1, n)),
            )
        )
    return out


class CorpusSpecError(ValueError):
    pass


def parse_corpus(spec: str) -> list[Digraph]:
    """Build a corpus from ``exhaustive:n``, ``tournaments:n``, ``random:n,count,seed``,
    ``random-tournament:n,count,seed`` or a DGR file path."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "exhaustive":
            return exhaustive_corpus(int(arg))
        if kind == "tournaments":
            return [t for n in range(1, int(arg) + 1) for t in all_tournaments(n)]
        if kind == "random":
            n, count, seed = (int(x) for x in arg.split(","))
            return random_corpus(n, count, seed)
        if kind == "random-tournament":
            n, count, seed = (int(x) for x in arg.split(","))
            return random_tournament_corpus(n, count, seed)
    except ValueError as exc:
        raise CorpusSpecError(f"bad corpus spec {spec!r}: {exc}") from None
    path = Path(spec)
    if not path.exists():
        raise CorpusSpecError(f"unknown corpus spec or missing file: {spec!r}")
    return [read_dgr(path)]


# -- reports -----------------------------------------------------------------


@dataclass
class Violation:
    index: int
    digraph: Digraph
    values: dict


@dataclass
class LawReport:
    law_id: str
    tested: int = 0
    skipped: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0
    informational: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {"id": self.law_id, "tested": self.tested, "violations": len(self.violations)}

    def line(self) -> str:
        status = "PASS" if self.passed else ("INFO" if self.informational else "FAIL")
        return (
            f"{status} {self.law_id}: tested={self.tested} skipped={self.skipped} "
            f"violations={len(self.violations)}"
        )


Check = Callable[[Digraph], "dict | None"]


def _run(law_id: str, corpus: Iterable[Digraph], check: Check, informational: bool = False) -> LawReport:
    """Apply ``check`` to each instance.

    ``check`` returns ``None`` to skip an instance, otherwise a dict of
    measured values with a boolean ``"ok"`` entry.
    """
    report = LawReport(law_id, informational=informational)
    start = time.perf_counter()
    for i, d in enumerate(corpus):
        values = check(d)
        if values is None:
            report.skipped += 1
            continue
        report.tested += 1
        if not values.pop("ok"):
            report.violations.append(Violation(i, d, values))
    report.elapsed = time.perf_counter() - start
    return report


# -- general digraphs --------------------------------------------------------


def _chain(d: Digraph) -> dict:
    a, b, c = dc(d), dac(d), psi(d)
    return {"ok": 1 <= a <= b <= c <= d.n, "dc": a, "dac": b, "psi": c, "n": d.n}


def check_chain(corpus: Iterable[Digraph]) -> LawReport:
    return _run("chain", corpus, _chain)


def _size(d: Digraph) -> dict:
    c = psi(d)
    return {"ok": c * (c - 1) <= d.m and c <= size_bound(d.m), "psi": c, "m": d.m}


def check_size_bound(corpus: Iterable[Digraph]) -> LawReport:
    return _run("size_bound", corpus, _size)


def _converse(d: Digraph) -> dict:
    e = converse(d)
    here, there = (dc(d), dac(d), psi(d)), (dc(e), dac(e), psi(e))
    return {"ok": here == there, "values": here, "converse_values": there}


def check_converse(corpus: Iterable[Digraph]) -> LawReport:
    return _run("converse", corpus, _converse)


def _asymmetric_half(d: Digraph) -> dict | None:
    if not d.is_asymmetric():
        return None
    b, c = dac(d), psi(d)
    return {"ok": 2 * b <= d.n + 1, "dac": b, "psi": c, "n": d.n}


def check_asymmetric_half(corpus: Iterable[Digraph]) -> LawReport:
    return _run("asymmetric_half", corpus, _asymmetric_half)


def _gap(d: Digraph) -> dict | None:
    if is_acyclic(d):
        return None
    a, b = dc(d), dac(d)
    return {"ok": 2 * (b - a) <= d.n - 3, "dc": a, "dac": b, "n": d.n}


def check_dac_dc_gap(corpus: Iterable[Digraph]) -> LawReport:
    """dac - dc <= (n-3)/2 for every digraph that is not acyclic."""
    return _run("dac_dc_gap", corpus, _gap)


def check_dac_dc_gap_asymmetric(corpus: Iterable[Digraph]) -> LawReport:
    """The same gap restricted to asymmetric digraphs."""
    return _run("dac_dc_gap_asymmetric", corpus, lambda d: _gap(d) if d.is_asymmetric() else None)


def _removal(d: Digraph) -> dict | None:
    if d.n < 2:
        return None
    b = dac(d)
    bad_vertices = [u for u in range(d.n) if not b - 1 <= dac(remove_vertex(d, u)) <= b]
    bad_arcs = [f for f in d.sorted_arcs() if not b - 1 <= dac(remove_arc(d, f)) <= b + 1]
    return {"ok": not bad_vertices and not bad_arcs, "dac": b, "vertices": bad_vertices, "arcs": bad_arcs}


def check_removal_laws(corpus: Iterable[Digraph]) -> LawReport:
    """Deleting a vertex lowers dac by at most one and never raises it; deleting an arc moves it by at most one."""
    return _run("removal", corpus, _removal)


def _bipartition(d: Digraph) -> dict | None:
    if d.n < 2:
        return None
    full = d.full_mask
    best = 0
    for x_mask in range(1, full):
        y_mask = full & ~x_mask
        if all(d.out_mask[x] & y_mask == y_mask for x in bits(x_mask)):
            best = max(best, min(x_mask.bit_count(), y_mask.bit_count()))
    b = dac(d)
    return {"ok": b >= best, "dac": b, "min_side": best}


def check_bipartition(corpus: Iterable[Digraph]) -> LawReport:
    return _run("bipartition", corpus, _bipartition)


def _half(d: Digraph) -> dict:
    a, b = dc(d), dac(d)
    return {"ok": 2 * b <= a + d.n, "dc": a, "dac": b, "n": d.n}


def check_half_bound(corpus: Iterable[Digraph]) -> LawReport:
    return _run("half_bound", corpus, _half)


def _greedy(d: Digraph) -> dict:
    cert = greedy_coloring(d)
    a, b = dc(d), dac(d)
    ok = cert.acyclic and cert.complete and a <= cert.k <= b
    return {"ok": ok, "k": cert.k, "dc": a, "dac": b}


def check_greedy(corpus: Iterable[Digraph]) -> LawReport:
    return _run("greedy", corpus, _greedy)


def _interpolation(d: Digraph) -> dict:
    a, b = dc(d), dac(d)
    missing = [l for l in range(a, b + 1) if complete_l_coloring(d, l) is None]
    beyond = b + 1 <= d.n and complete_l_coloring(d, b + 1) is not None
    return {"ok": not missing and not beyond, "dc": a, "dac": b, "missing": missing, "found_above": beyond}


def check_interpolation(corpus: Iterable[Digraph]) -> LawReport:
    return _run("interpolation", corpus, _interpolation)


def _nordhaus_gaddum(d: Digraph) -> dict | None:
    n = d.n
    if n > COMPLEMENT_MAX_N:
        return None
    a, b, ac = dc(d), dac(d), dc(complement(d))
    checks = {
        "dc_sum": 3 * (a + ac) <= 4 * n + 2,  # dc + dc^c <= ceil(4n/3)
        "dc_product": 9 * a * ac <= (2 * n + 1) ** 2,
        "dac_sum": 2 * (b + ac) <= 3 * n + 1,  # dac + dc^c <= ceil(3n/2)
        "dac_product": 16 * b * ac <= (3 * n + 1) ** 2,
        "intermediate": 2 * b + ac <= 2 * n + 1,
    }
    failed = [k for k, v in checks.items() if not v]
    return {"ok": not failed, "failed": failed, "dc": a, "dac": b, "dc_complement": ac, "n": n}


def check_nordhaus_gaddum(corpus: Iterable[Digraph]) -> LawReport:
    return _run("nordhaus_gaddum", corpus, _nordhaus_gaddum)


def _dac_dac(d: Digraph) -> dict | None:
    if d.n > COMPLEMENT_MAX_N:
        return None
    b, bc = dac(d), dac(complement(d))
    return {"ok": 2 * (b + bc) <= 3 * d.n + 1, "dac": b, "dac_complement": bc, "n": d.n}


def check_nordhaus_gaddum_dac_dac(corpus: Iterable[Digraph]) -> LawReport:
    """Probe of dac(D) + dac(D^c) <= floor((3n+1)/2); informational only."""
    return _run("ng_dac_dac", corpus, _dac_dac, informational=True)


def _k_minimal(d: Digraph) -> dict:
    k = dac(d)
    by_def = is_k_minimal(d)
    by_size = d.m == k * (k - 1)
    return {"ok": by_def == by_size, "dac": k, "m": d.m, "by_definition": by_def, "by_size": by_size}


def check_k_minimal(corpus: Iterable[Digraph]) -> LawReport:
    return _run("k_minimal", corpus, _k_minimal)


# -- dihomomorphisms ---------------------------------------------------------


def _set_partitions(n: int, k: int) -> Iterator[list[int]]:
    """Restricted growth strings of length ``n`` with exactly ``k`` blocks."""
    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == n:
            if top == k:
                yield prefix
            return
        if top + (n - len(prefix)) < k:
            return
        for c in range(min(top + 1, k)):
            yield from grow(prefix + [c], max(top, c + 1))

    return grow([], 0)


def _shares_optimal_color(d: Digraph, u: int, v: int, k: int) -> bool:
    for labels in _set_partitions(d.n, k):
        if labels[u] == labels[v] and is_acyclic_coloring(d, Coloring(c + 1 for c in labels)):
            return True
    return False


def _dihom_dc(d: Digraph) -> dict | None:
    steps = legal_steps(d)
    if not steps:
        return None
    a = dc(d)
    bad = []
    for u, v in steps:
        e = dc(elementary_image(d, u, v))
        if not a <= e <= a + 1:
            bad.append((u, v, "bound", e))
        elif e == a and not _shares_optimal_color(d, u, v, a):
            bad.append((u, v, "kept without shared color", e))
    return {"ok": not bad, "dc": a, "bad_steps": bad}


def check_dihom_dc(corpus: Iterable[Digraph]) -> LawReport:
    """One identification raises dc by at most one; if dc is unchanged, some optimal coloring merges the pair."""
    return _run("dihom_dc", corpus, _dihom_dc)


def _dihom_dc_equality(d: Digraph) -> dict | None:
    steps = legal_steps(d)
    if not steps:
        return None
    a = dc(d)
    bad = [
        (u, v, e)
        for u, v in steps
        if ((e := dc(elementary_image(d, u, v))) == a) != _shares_optimal_color(d, u, v, a)
    ]
    return {"ok": not bad, "dc": a, "bad_steps": bad}


def check_dihom_dc_equality(corpus: Iterable[Digraph]) -> LawReport:
    """dc is unchanged by identifying u, v exactly when some optimal coloring gives them one color.

    The "if" half is false: on the path 0 -> 1 -> 2 the only optimal
    coloring merges 0 and 2, yet identifying them creates a 2-cycle.
    """
    return _run("dihom_dc_equality", corpus, _dihom_dc_equality)


def _dihom_complement(d: Digraph) -> dict | None:
    steps = legal_steps(d)
    if not steps or d.n > COMPLEMENT_MAX_N:
        return None
    ac = dc(complement(d))
    bad = [
        (u, v, e)
        for u, v in steps
        if not ac - 1 <= (e := dc(complement(elementary_image(d, u, v)))) <= ac + 1
    ]
    return {"ok": not bad, "dc_complement": ac, "bad_steps": bad}


def check_dihom_complement(corpus: Iterable[Digraph]) -> LawReport:
    return _run("dihom_complement", corpus, _dihom_complement)


def _dihom_dac(d: Digraph) -> dict | None:
    steps = legal_steps(d)
    if not steps:
        return None
    b = dac(d)
    images = [(u, v, dac(elementary_image(d, u, v))) for u, v in steps]
    bad = [s for s in images if not b - 2 <= s[2] <= b]
    noncomplete = d.m != d.n * (d.n - 1)
    preserved = any(s[2] == b for s in images)
    return {"ok": not bad and (preserved or not noncomplete), "dac": b, "bad_steps": bad, "preserving_step": preserved}


def check_dihom_dac(corpus: Iterable[Digraph]) -> LawReport:
    return _run("dihom_dac", corpus, _dihom_dac)


def _dihom_interpolation(d: Digraph) -> dict:
    a, b = dc(d), dac(d)
    seq = interpolation_sequence(d)
    target_ok = seq.target.n == b and seq.target.m == b * (b - 1)
    monotone = all(dc(img) >= a for img in seq.images)
    wrong = [l for l in range(a, b + 1) if dc(image_with_dichromatic(d, l, seq)) != l]
    return {"ok": target_ok and monotone and not wrong, "dc": a, "dac": b, "wrong_levels": wrong}


def check_dihom_interpolation(corpus: Iterable[Digraph]) -> LawReport:
    """The collapse sequence ends at the complete symmetric digraph of order dac and hits every dc level."""
    return _run("dihom_interpolation", corpus, _dihom_interpolation)


# -- tournaments -------------------------------------------------------------


def _tournament(d: Digraph) -> dict | None:
    if d.n < 1 or not is_tournament(d):
        return None
    n = d.n
    a, b, c = dc(d), dac(d), psi(d)
    comps = len(strong_components(d))
    checks = {
        "upper": 2 * b <= n + 1 and 2 * c <= n + 1,
        "log_lower": n < 3 or n / (2 * log2((2 * n + 2) / 3)) <= b + LOG_SLACK,
        "dc_dac_product": 2 * a * b >= n,
        "sqrt_lower": b * b + b >= n,  # dac >= (sqrt(1+4n) - 1) / 2
        "strong_components": 2 * b >= comps,
    }
    failed = [k for k, v in checks.items() if not v]
    return {"ok": not failed, "failed": failed, "dc": a, "dac": b, "psi": c, "components": comps, "n": n}


def check_tournament_bounds(corpus: Iterable[Digraph]) -> LawReport:
    return _run("tournament_bounds", corpus, _tournament)


LAWS: dict[str, Callable[[Iterable[Digraph]], LawReport]] = {
    "chain": check_chain,
    "size_bound": check_size_bound,
    "converse": check_converse,
    "asymmetric_half": check_asymmetric_half,
    "dac_dc_gap": check_dac_dc_gap,
    "dac_dc_gap_asymmetric": check_dac_dc_gap_asymmetric,
    "removal": check_removal_laws,
    "bipartition": check_bipartition,
    "half_bound": check_half_bound,
    "greedy": check_greedy,
    "interpolation": check_interpolation,
    "nordhaus_gaddum": check_nordhaus_gaddum,
    "ng_dac_dac": check_nordhaus_gaddum_dac_dac,
    "k_minimal": check_k_minimal,
    "dihom_dc": check_dihom_dc,
    "dihom_dc_equality": check_dihom_dc_equality,
    "dihom_complement": check_dihom_complement,
    "dihom_dac": check_dihom_dac,
    "dihom_interpolation": check_dihom_interpolation,
    "tournament_bounds": check_tournament_bounds,
}


def run_laws(law_ids: Sequence[str], corpus: Sequence[Digraph]) -> list[LawReport]:
    unknown = [x for x in law_ids if x not in LAWS]
    if unknown:
        raise KeyError(f"unknown law ids: {unknown}")
    return [LAWS[x](corpus) for x in law_ids]


def failing(reports: Iterable[LawReport]) -> list[LawReport]:
    """Reports that should make a verification run fail (informational probes excluded)."""
    return [r for r in reports if not r.passed and not r.informational]
