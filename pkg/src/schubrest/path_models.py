"""Nonintersecting path families and diagram subsets on a Young diagram D_mu.

Both models, together with semistandard Young tableaux on mu, carry ladder
moves generating the same directed graph from a distinguished top element.
``family_to_subset`` (complement of support) and ``subset_to_ssyt`` /
``ssyt_to_subset`` realise the isomorphisms.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Sequence, TypeVar

from .core_index import Box, Partition, box_leq, complement, partition_leq, pi_inverse
from .tableaux import SetValuedTableau, is_on_mu, is_semistandard, ladder_moves_ssyt, top_ssyt

T = TypeVar("T", bound=Hashable)


class ModelError(ValueError):
    """Raised for objects that do not belong to the requested model."""


def _as_mu(mu: Sequence[int] | Partition) -> Partition:
    return Partition.of(mu)


def _fit(lam: Sequence[int] | Partition, mu: Partition) -> Partition:
    lam = Partition.of(lam)
    try:
        lam = Partition.of(lam, len(mu))
    except ValueError as exc:
        raise ModelError(f"{lam} has more rows than {mu}") from exc
    if not partition_leq(lam, mu):
        raise ModelError(f"{lam} is not contained in {mu}")
    return lam


def diagram(mu: Sequence[int] | Partition) -> frozenset[Box]:
    return frozenset(_as_mu(mu).boxes())


# Paths and families --------------------------------------------------------


@dataclass(frozen=True)
class LatticePath:
    """Boxes from the lower-left endpoint to the upper-right one."""

    boxes: tuple[Box, ...]

    def __post_init__(self) -> None:
        boxes = tuple(Box(*b) for b in self.boxes)
        object.__setattr__(self, "boxes", boxes)
        if not boxes:
            raise ModelError("a path has at least one box")
        for p, q in zip(boxes, boxes[1:]):
            if not ((q.row == p.row - 1 and q.col == p.col) or (q.row == p.row and q.col == p.col + 1)):
                raise ModelError(f"step {p} -> {q} is not up or right")

    @property
    def start(self) -> Box:
        return self.boxes[0]

    @property
    def end(self) -> Box:
        return self.boxes[-1]

    def glb(self) -> Box:
        return Box(self.end.row, self.start.col)

    def is_on(self, mu: Partition) -> bool:
        """Inside D_mu, starting at the bottom of a column and ending at the end of a row."""
        return (
            all(mu.contains_box(b) for b in self.boxes)
            and self.start.row == mu.column_length(self.start.col)
            and self.end.col == mu.part(self.end.row)
        )


def glb(path: LatticePath) -> Box:
    return path.glb()


@dataclass(frozen=True)
class PathFamily:
    paths: frozenset[LatticePath]

    def __post_init__(self) -> None:
        paths = frozenset(self.paths)
        object.__setattr__(self, "paths", paths)
        seen: set[Box] = set()
        for p in paths:
            for b in p.boxes:
                if b in seen:
                    raise ModelError(f"paths intersect at {b}")
                seen.add(b)

    @classmethod
    def of(cls, paths: Iterable[Iterable[tuple[int, int]]]) -> "PathFamily":
        return cls(frozenset(LatticePath(tuple(p)) for p in paths))

    def support(self) -> frozenset[Box]:
        return frozenset(b for p in self.paths for b in p.boxes)

    def twist(self) -> frozenset[Box]:
        return twist(self)

    def sorted_paths(self) -> list[LatticePath]:
        return sorted(self.paths, key=lambda p: p.boxes)

    def sort_key(self) -> tuple[Box, ...]:
        return tuple(sorted(self.support()))

    def is_on(self, mu: Partition) -> bool:
        return all(p.is_on(mu) for p in self.paths)

    def to_json(self) -> list[list[list[int]]]:
        return [[list(b) for b in p.boxes] for p in self.sorted_paths()]

    def label(self) -> str:
        if not self.paths:
            return "()"
        return " | ".join(" ".join(f"{r},{c}" for r, c in p.boxes) for p in self.sorted_paths())


def twist(family: PathFamily) -> frozenset[Box]:
    return frozenset(p.glb() for p in family.paths)


def _path_from_cells(cells: Iterable[Box]) -> LatticePath:
    # along a path col - row goes up by one per step
    return LatticePath(tuple(sorted(cells, key=lambda b: b.col - b.row)))


def _components(cells: set[Box]) -> list[set[Box]]:
    comps = []
    todo = set(cells)
    while todo:
        seed = todo.pop()
        comp = {seed}
        stack = [seed]
        while stack:
            r, c = stack.pop()
            for nb in (Box(r + 1, c), Box(r - 1, c), Box(r, c + 1), Box(r, c - 1)):
                if nb in todo:
                    todo.remove(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(comp)
    return comps


def top_family(lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> PathFamily:
    """The family whose support is D_mu minus D_lam, peeled off one
    upper-left boundary strip at a time."""
    mu = _as_mu(mu)
    lam = _fit(lam, mu)
    rest = set(diagram(mu)) - set(lam.boxes())
    paths = []
    while rest:
        strip = {b for b in rest if Box(b.row - 1, b.col - 1) not in rest}
        for comp in _components(strip):
            path = _path_from_cells(comp)
            if not path.is_on(mu):
                raise ModelError(f"boundary strip {sorted(comp)} is not a path on {mu}")
            paths.append(path)
        rest -= strip
    return PathFamily(frozenset(paths))


def family_ladder_moves(family: PathFamily, mu: Sequence[int] | Partition) -> list[PathFamily]:
    """Families reachable by one ladder move: a square of D_mu whose NW box is
    free and whose other three boxes lie on one path; that path trades its SE
    box for the NW one."""
    mu = _as_mu(mu)
    owner = {b: p for p in family.paths for b in p.boxes}
    out = []
    for i, j in mu.boxes():
        nw, sw, ne, se = Box(i, j), Box(i + 1, j), Box(i, j + 1), Box(i + 1, j + 1)
        if not mu.contains_box(se) or nw in owner:
            continue
        if sw in owner and ne in owner and se in owner:
            path = owner[se]
            if owner[sw] is not path or owner[ne] is not path:
                raise ModelError(f"square at {nw} spans two paths")
            boxes = tuple(nw if b == se else b for b in path.boxes)
            new_paths = (family.paths - {path}) | {LatticePath(boxes)}
            out.append(PathFamily(new_paths))
    return sorted(out, key=PathFamily.sort_key)


def _closure(start: T, moves: Callable[[T], Iterable[T]]) -> tuple[list[T], list[tuple[T, T]]]:
    """Breadth-first ladder closure; returns nodes in discovery order and edges."""
    seen = {start}
    order = [start]
    edges = []
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in moves(x):
            edges.append((x, y))
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order, edges


def _paths_between(start: Box, end: Box, mu: Partition) -> Iterator[tuple[Box, ...]]:
    """All up/right box paths from start to end inside D_mu."""

    def rec(cur: Box, acc: list[Box]) -> Iterator[tuple[Box, ...]]:
        if cur == end:
            yield tuple(acc)
            return
        for nxt in (Box(cur.row - 1, cur.col), Box(cur.row, cur.col + 1)):
            if nxt.row >= end.row and nxt.col <= end.col and mu.contains_box(nxt):
                acc.append(nxt)
                yield from rec(nxt, acc)
                acc.pop()

    if mu.contains_box(start) and mu.contains_box(end) and start.row >= end.row and start.col <= end.col:
        yield from rec(start, [start])


def families_with_twist(chain: Iterable[tuple[int, int]], mu: Sequence[int] | Partition) -> list[PathFamily]:
    """Every family of nonintersecting paths on D_mu with the given twist.

    A glb (k, j) pins the path's endpoints: bottom of column j and end of row k.
    """
    mu = _as_mu(mu)
    glbs = sorted(Box(*b) for b in chain)
    candidates = []
    for k, j in glbs:
        start = Box(mu.column_length(j), j)
        end = Box(k, mu.part(k))
        candidates.append(list(_paths_between(start, end, mu)))
    out: list[PathFamily] = []

    def rec(idx: int, used: set[Box], chosen: list[tuple[Box, ...]]) -> None:
        if idx == len(candidates):
            out.append(PathFamily(frozenset(LatticePath(p) for p in chosen)))
            return
        for p in candidates[idx]:
            if used.isdisjoint(p):
                chosen.append(p)
                rec(idx + 1, used | set(p), chosen)
                chosen.pop()

    rec(0, set(), [])
    return sorted(out, key=PathFamily.sort_key)


def enumerate_families(
    lam: Sequence[int] | Partition, mu: Sequence[int] | Partition, method: str = "ladder"
) -> list[PathFamily]:
    """F_{lam,mu}, either as the ladder closure of the top family or as all
    families sharing its twist."""
    mu = _as_mu(mu)
    top = top_family(lam, mu)
    if method == "ladder":
        nodes, _ = _closure(top, lambda f: family_ladder_moves(f, mu))
        return sorted(nodes, key=PathFamily.sort_key)
    if method == "twist":
        return families_with_twist(top.twist(), mu)
    raise ValueError(f"unknown method {method!r}")


# Twisted chains --------------------------------------------------------------


def is_twisted_chain(boxes: Iterable[tuple[int, int]], mu: Sequence[int] | Partition) -> bool:
    mu = _as_mu(mu)
    bs = [Box(*b) for b in boxes]
    if not all(mu.contains_box(b) for b in bs):
        return False
    for x in range(len(bs)):
        for y in range(x + 1, len(bs)):
            p, q = bs[x], bs[y]
            if p.row == q.row or p.col == q.col:
                return False
            if box_leq(p, q) or box_leq(q, p):
                continue
            # D_mu is a down-set, so an upper bound exists iff the join is inside
            if mu.contains_box(Box(max(p.row, q.row), max(p.col, q.col))):
                return False
    return True


def swap_by_chain(chain: Iterable[tuple[int, int]], mu: Sequence[int] | Partition, d: int, n: int) -> tuple[int, ...]:
    """Remove beta(d+1-x) and adjoin beta'(y) for every (x, y) in the chain."""
    mu = Partition.of(mu, d)
    beta = pi_inverse(mu, d, n)
    comp = complement(beta)
    chain = list(chain)
    removed = {beta(d + 1 - x) for x, _ in chain}
    added = {comp[y - 1] for _, y in chain}
    return tuple(sorted((set(beta.entries) - removed) | added))


def twisted_chain_target(
    lam: Sequence[int] | Partition, mu: Sequence[int] | Partition, d: int, n: int
) -> frozenset[Box]:
    """S_{lam,mu}, computed as the twist of the top family and checked against
    the subset swap it must encode."""
    mu = Partition.of(mu, d)
    lam = Partition.of(lam, d)
    chain = top_family(lam, mu).twist()
    alpha = pi_inverse(lam, d, n)
    if not is_twisted_chain(chain, mu):
        raise AssertionError(f"twist {sorted(chain)} is not a twisted chain of {mu}")
    rebuilt = swap_by_chain(chain, mu, d, n)
    if rebuilt != alpha.entries:
        raise AssertionError(f"chain {sorted(chain)} rebuilds {rebuilt}, expected {alpha.entries}")
    return chain


# Diagram subsets ---------------------------------------------------------------


def top_subset(lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> frozenset[Box]:
    mu = _as_mu(mu)
    return frozenset(_fit(lam, mu).boxes())


def subset_ladder_moves(subset: frozenset[Box], mu: Sequence[int] | Partition) -> list[frozenset[Box]]:
    """Move a box to its SE diagonal neighbour when it is the only box of its
    2x2 square in D_mu that belongs to the subset."""
    mu = _as_mu(mu)
    out = []
    for i, j in sorted(subset):
        sw, ne, se = Box(i + 1, j), Box(i, j + 1), Box(i + 1, j + 1)
        if not mu.contains_box(se):
            continue
        if sw in subset or ne in subset or se in subset:
            continue
        out.append((subset - {Box(i, j)}) | {se})
    return sorted(out, key=lambda s: tuple(sorted(s)))


def enumerate_subsets(lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> list[frozenset[Box]]:
    mu = _as_mu(mu)
    nodes, _ = _closure(top_subset(lam, mu), lambda s: subset_ladder_moves(s, mu))
    return sorted(nodes, key=lambda s: tuple(sorted(s)))


def subset_label(subset: Iterable[tuple[int, int]]) -> str:
    return " ".join(f"{r},{c}" for r, c in sorted(subset)) or "()"


# Bijections --------------------------------------------------------------------


def family_to_subset(family: PathFamily, mu: Sequence[int] | Partition) -> frozenset[Box]:
    return diagram(mu) - family.support()


def ssyt_to_subset(p: SetValuedTableau, mu: Sequence[int] | Partition) -> frozenset[Box]:
    """Entry x in box (r, c) goes to box (x, x - r + c) of D_mu."""
    mu = _as_mu(mu)
    out = set()
    for x, r, c in p.entries():
        b = Box(x, x - r + c)
        if not mu.contains_box(b):
            raise ModelError(f"entry {x} at ({r},{c}) maps to {b}, outside D_mu")
        out.add(b)
    if len(out) != p.total_entries:
        raise ModelError("two entries land on the same box")
    return frozenset(out)


def subset_to_ssyt(
    subset: Iterable[tuple[int, int]], lam: Sequence[int] | Partition, mu: Sequence[int] | Partition
) -> SetValuedTableau:
    """Inverse of ``ssyt_to_subset``: rows of the subset's boxes on each
    diagonal, sorted, fill the shape's boxes on that diagonal top to bottom."""
    mu = _as_mu(mu)
    lam = _fit(lam, mu)
    subset = frozenset(Box(*b) for b in subset)
    by_diag: dict[int, list[int]] = {}
    for x, y in subset:
        by_diag.setdefault(y - x, []).append(x)
    slots: dict[int, list[Box]] = {}
    for b in lam.boxes():
        slots.setdefault(b.col - b.row, []).append(b)
    grid: dict[Box, int] = {}
    for k in set(by_diag) | set(slots):
        xs = sorted(by_diag.get(k, []))
        places = sorted(slots.get(k, []))
        if len(xs) != len(places):
            raise ModelError(f"diagonal {k}: {len(xs)} boxes for {len(places)} places")
        grid.update(zip(places, xs))
    rows = tuple(tuple((grid[Box(i, j)],) for j in range(1, lam.part(i) + 1)) for i in range(1, len(lam) + 1))
    tab = SetValuedTableau(rows)
    if not (is_semistandard(tab) and is_on_mu(tab, mu)) or ssyt_to_subset(tab, mu) != subset:
        raise ModelError(f"{subset_label(subset)} has no preimage in SSYT on {mu}")
    return tab


# Ladder-move graphs ------------------------------------------------------------


@dataclass
class LadderGraph:
    """Directed ladder-move graph; ``nodes[0]`` is the top element."""

    nodes: list
    edges: list[tuple[int, int]]
    labels: list[str]

    def to_dot(self, name: str = "ladder") -> str:
        lines = [f"digraph {name} {{"]
        for i, lab in enumerate(self.labels):
            esc = lab.replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  n{i} [label="{esc}"];')
        for a, b in self.edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _graph(start: T, moves: Callable[[T], Iterable[T]], key: Callable[[T], object], label: Callable[[T], str]) -> LadderGraph:
    nodes, edges = _closure(start, moves)
    rest = sorted(nodes[1:], key=key)
    ordered = [start] + rest
    index = {x: i for i, x in enumerate(ordered)}
    e = sorted({(index[a], index[b]) for a, b in edges})
    return LadderGraph(ordered, e, [label(x) for x in ordered])


def ladder_graph(model: str, lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> LadderGraph:
    """Ladder-move graph of ``model`` in {"ssyt", "paths", "subsets"}."""
    mu = _as_mu(mu)
    lam = _fit(lam, mu)
    if model == "ssyt":
        return _graph(top_ssyt(lam), lambda t: ladder_moves_ssyt(t, mu), SetValuedTableau.sort_key, str)
    if model == "paths":
        return _graph(top_family(lam, mu), lambda f: family_ladder_moves(f, mu), PathFamily.sort_key, PathFamily.label)
    if model == "subsets":
        return _graph(
            top_subset(lam, mu), lambda s: subset_ladder_moves(s, mu), lambda s: tuple(sorted(s)), subset_label
        )
    raise ValueError(f"unknown model {model!r}")


def graphs_isomorphic_via_bijections(lam: Sequence[int] | Partition, mu: Sequence[int] | Partition) -> bool:
    """Check that h maps the family graph onto the subset graph and g maps the
    subset graph onto the SSYT graph, edge for edge and top to top."""
    mu = _as_mu(mu)
    gf = ladder_graph("paths", lam, mu)
    gd = ladder_graph("subsets", lam, mu)
    gt = ladder_graph("ssyt", lam, mu)
    if not (len(gf.nodes) == len(gd.nodes) == len(gt.nodes)):
        return False
    h = [family_to_subset(f, mu) for f in gf.nodes]
    d_index = {s: i for i, s in enumerate(gd.nodes)}
    if any(s not in d_index for s in h) or len(set(h)) != len(h):
        return False
    h_idx = [d_index[s] for s in h]
    if h_idx[0] != 0 or {(h_idx[a], h_idx[b]) for a, b in gf.edges} != set(gd.edges):
        return False
    g = [subset_to_ssyt(s, lam, mu) for s in gd.nodes]
    t_index = {t: i for i, t in enumerate(gt.nodes)}
    if any(t not in t_index for t in g) or len(set(g)) != len(g):
        return False
    g_idx = [t_index[t] for t in g]
    return g_idx[0] == 0 and {(g_idx[a], g_idx[b]) for a, b in gd.edges} == set(gt.edges)

