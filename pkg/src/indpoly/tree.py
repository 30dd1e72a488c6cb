"""Trees and forests, named constructions, independence polynomials, canonical forms."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .polynomial import IntPolynomial, _mul

BRUTEFORCE_MAX_N = 24


class TreeError(ValueError):
    """Base class for malformed tree input."""


class LabelRangeError(TreeError):
    pass


class SelfLoopError(TreeError):
    pass


class DuplicateEdgeError(TreeError):
    pass


class CycleError(TreeError):
    pass


class DisconnectedError(TreeError):
    pass


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    seen = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise LabelRangeError(f"edge ({u}, {v}) has a label outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
    return tuple(sorted(seen))


def _find_cycle_free(n: int, edges: Sequence[tuple[int, int]]) -> int:
    """Union-find pass; returns the number of components or raises CycleError."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleError(f"edge ({u}, {v}) closes a cycle")
        parent[ru] = rv
        comps -= 1
    return comps


@dataclass(frozen=True)
class Forest:
    """Acyclic simple graph on vertices ``0..n-1``; ``n == 0`` is allowed."""

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out


@dataclass(frozen=True)
class Tree(Forest):
    """Connected forest with at least one vertex."""


@dataclass(frozen=True)
class RootedTree:
    tree: Tree
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.tree.n:
            raise LabelRangeError(f"root {self.root} is not a vertex of a {self.tree.n}-vertex tree")

    @property
    def n(self) -> int:
        return self.tree.n


def forest_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Forest:
    if n < 0:
        raise TreeError("vertex count must be nonnegative")
    es = _normalize_edges(n, edges)
    _find_cycle_free(n, es)
    return Forest(n, es)


def tree_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate an edge list as a tree on ``0..n-1``.

    Each failure mode raises its own ``TreeError`` subclass, checked in the
    order: label range, self-loop, duplicate, cycle, disconnected.
    """
    if n < 1:
        raise TreeError("a tree needs at least one vertex")
    es = _normalize_edges(n, edges)
    comps = _find_cycle_free(n, es)
    if comps != 1:
        raise DisconnectedError(f"graph has {comps} components")
    return Tree(n, es)


def tree_from_parents(parents: Sequence[int]) -> Tree:
    """Tree whose vertex ``i > 0`` hangs from ``parents[i]``; ``parents[0]`` is ignored."""
    return tree_from_edges(len(parents), [(parents[i], i) for i in range(1, len(parents))])


def tree_from_level_sequence(levels: Sequence[int]) -> Tree:
    """Preorder depth sequence (root depth 0) to a tree labelled in preorder."""
    n = len(levels)
    if n == 0 or levels[0] != 0:
        raise TreeError("level sequence must start with the root at depth 0")
    last = [0] * (n + 1)
    edges = []
    for i in range(1, n):
        d = levels[i]
        if not 1 <= d <= levels[i - 1] + 1:
            raise TreeError(f"invalid depth {d} at position {i}")
        edges.append((last[d - 1], i))
        last[d] = i
    return Tree(n, tuple(sorted(edges)))


def pruefer_decode(seq: Sequence[int], n: int) -> Tree:
    """Labelled tree on ``0..n-1`` from a Pruefer sequence of length ``n - 2``."""
    if n == 1:
        return Tree(1)
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return tree_from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniformly random labelled tree on ``n`` vertices."""
    return pruefer_decode([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


# --- named constructions -------------------------------------------------


def caterpillar(a: Sequence[int]) -> Tree:
    """Spine ``v_1..v_m`` (labels ``0..m-1``) with ``a[i]`` pendant leaves on ``v_{i+1}``."""
    if len(a) == 0:
        raise TreeError("a caterpillar needs at least one spine vertex")
    if any(k < 0 for k in a):
        raise TreeError("leaf counts must be nonnegative")
    m = len(a)
    edges = [(i, i + 1) for i in range(m - 1)]
    nxt = m
    for i, k in enumerate(a):
        for _ in range(k):
            edges.append((i, nxt))
            nxt += 1
    return tree_from_edges(nxt, edges)


def _named(adjacency: dict[str, list[str]]) -> Tree:
    # first key is the root; labels follow first-appearance order
    order: list[str] = []
    for u, vs in adjacency.items():
        for w in [u, *vs]:
            if w not in order:
                order.append(w)
    idx = {name: i for i, name in enumerate(order)}
    return tree_from_edges(len(order), [(idx[u], idx[v]) for u, vs in adjacency.items() for v in vs])


_R19 = {
    "r": ["a", "b", "u", "v"],
    "u": ["c", "p1"],
    "p1": ["p2"],
    "p2": ["p3"],
    "v": ["d1", "d2", "d3", "d4", "x", "y"],
    "x": ["e1", "e2"],
    "y": ["f1", "f2"],
}

_R20 = {
    "r": ["a", "u", "p"],
    "u": ["b", "u1"],
    "u1": ["u2"],
    "u2": ["u3"],
    "p": ["q"],
    "q": ["c1", "c2", "t", "s"],
    "t": ["d1", "d2"],
    "s": ["e1", "e2", "z"],
    "z": ["f1", "f2"],
}

CATERPILLARS = {
    "G8": (1, 0, 0, 0, 2),
    "G11": (1, 0, 1, 2, 0, 1),
    "G13": (1, 0, 1, 4, 0, 1),
    "G14": (2, 1, 0, 0, 0, 2, 2),
    "G16": (2, 1, 0, 1, 0, 1, 1, 0, 1),
    "G17": (1, 0, 0, 0, 2, 3, 1, 0, 1),
}

BUILTIN_NAMES = ("K1", "P2", "P3_mid_rooted", "R3", "R19", "R20", *CATERPILLARS)


def builtin_tree(name: str) -> Tree | RootedTree:
    """Named trees; ``K1``, ``R3``/``P3_mid_rooted``, ``R19``, ``R20`` come back rooted."""
    if name == "K1":
        return RootedTree(Tree(1), 0)
    if name == "P2":
        return tree_from_edges(2, [(0, 1)])
    if name in ("R3", "P3_mid_rooted"):
        return RootedTree(tree_from_edges(3, [(0, 1), (0, 2)]), 0)
    if name == "R19":
        return RootedTree(_named(_R19), 0)
    if name == "R20":
        return RootedTree(_named(_R20), 0)
    if name in CATERPILLARS:
        return caterpillar(CATERPILLARS[name])
    raise KeyError(f"unknown tree name {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def corona_two_leaves(t: Forest) -> Tree | Forest:
    """Attach two new pendant leaves to every vertex (``G o 2K1``)."""
    n = t.n
    edges = list(t.edges)
    for v in range(n):
        edges.append((v, n + 2 * v))
        edges.append((v, n + 2 * v + 1))
    cls = Tree if isinstance(t, Tree) else Forest
    return cls(3 * n, tuple(sorted(edges)))


def bridge(left: RootedTree, right: RootedTree) -> RootedTree:
    """Disjoint union plus the edge between the two roots, rooted at ``left.root``.

    Left labels are kept; right labels shift by ``left.n``.
    """
    k = left.n
    edges = list(left.tree.edges)
    edges.extend((u + k, v + k) for u, v in right.tree.edges)
    edges.append((left.root, right.root + k))
    return RootedTree(Tree(k + right.n, tuple(sorted(edges))), left.root)


def remove_vertices(t: Forest, s: Iterable[int]) -> Forest:
    """Induced forest on the complement of ``s``; survivors keep their relative order."""
    drop = set(s)
    for v in drop:
        if not 0 <= v < t.n:
            raise LabelRangeError(f"vertex {v} out of range for n={t.n}")
    keep = [v for v in range(t.n) if v not in drop]
    new = {v: i for i, v in enumerate(keep)}
    edges = tuple(sorted((new[u], new[v]) for u, v in t.edges if u in new and v in new))
    return Forest(len(keep), edges)


def closed_neighborhood(t: Forest, v: int) -> set[int]:
    return {v, *t.neighbors(v)}


# --- independence polynomials -------------------------------------------


def _component_poly(adj: Sequence[Sequence[int]], root: int, seen: list[bool]) -> list[int]:
    order, parent = [root], {root: -1}
    seen[root] = True
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
                stack.append(w)
    excl: dict[int, list[int]] = {}
    incl: dict[int, list[int]] = {}
    for v in reversed(order):
        e = excl.pop(v, [1])
        i = incl.pop(v, [0, 1])
        p = parent[v]
        if p < 0:
            return _add(e, i)
        excl[p] = _mul(excl.get(p, [1]), _add(e, i))
        incl[p] = _mul(incl.get(p, [0, 1]), e)
    raise AssertionError("unreachable")


def _add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return out


def independence_polynomial(f: Forest) -> IntPolynomial:
    """Exact independence polynomial by post-order DP, one component at a time."""
    adj = f.adjacency
    seen = [False] * f.n
    total = [1]
    for v in range(f.n):
        if not seen[v]:
            total = _mul(total, _component_poly(adj, v, seen))
    return IntPolynomial(total)


class OracleLimitError(ValueError):
    pass


def independence_polynomial_bruteforce(f: Forest) -> IntPolynomial:
    """Count independent vertex subsets by size over all ``2**n`` subsets.

    Subset ``m`` with top bit ``b`` is independent iff ``m - 2**b`` is and ``b``
    has no neighbour among the lower bits.
    """
    n = f.n
    if n > BRUTEFORCE_MAX_N:
        raise OracleLimitError(f"brute force is limited to n <= {BRUTEFORCE_MAX_N}, got {n}")
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    indep = np.zeros(size, dtype=bool)
    card = np.zeros(size, dtype=np.int8)
    indep[0] = True
    for b in range(n):
        lo = 1 << b
        lower_nbrs = sum(1 << w for w in f.neighbors(b) if w < b)
        indep[lo : 2 * lo] = indep[:lo] & ((masks[:lo] & lower_nbrs) == 0)
        card[lo : 2 * lo] = card[:lo] + 1
    counts = np.bincount(card[indep], minlength=n + 1)
    return IntPolynomial(int(c) for c in counts)


# --- canonical forms ------------------------------------------------------


@dataclass(frozen=True)
class CanonicalCode:
    """Canonical preorder depth sequence; ``kind`` is ``"rooted"`` or ``"free"``."""

    code: tuple[int, ...]
    kind: str

    def __str__(self) -> str:
        return " ".join(map(str, self.code))


def _canonical_levels(adj: Sequence[Sequence[int]], root: int) -> tuple[int, ...]:
    # children in decreasing order of their own depth sequence gives the
    # lexicographically largest preorder depth sequence
    n = len(adj)
    depth = [0] * n
    parent = [-1] * n
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w != parent[u]:
                parent[w] = u
                depth[w] = depth[u] + 1
                order.append(w)
                stack.append(w)
    seqs: list[tuple[int, ...] | None] = [None] * n
    kids: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for v in reversed(order):
        ch = kids[v]
        ch.sort(reverse=True)
        s = (depth[v],)
        for c in ch:
            s += c
        kids[v] = []
        if parent[v] >= 0:
            kids[parent[v]].append(s)
        seqs[v] = s
    return tuple(d - depth[root] for d in seqs[root])


def rooted_canonical(rt: RootedTree) -> CanonicalCode:
    return CanonicalCode(_canonical_levels(rt.tree.adjacency, rt.root), "rooted")


def tree_centers(t: Forest) -> list[int]:
    """One or two centres of a tree, by repeated leaf stripping."""
    n = t.n
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in t.adjacency]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for u in layer:
            for w in t.adjacency[u]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def split_first_branch(code: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a rooted depth sequence into its first root branch and the rest.

    Both parts are renormalised to start at depth 0.
    """
    m = len(code)
    for i in range(2, len(code)):
        if code[i] == 1:
            m = i
            break
    first = tuple(d - 1 for d in code[1:m])
    rest = (0,) + tuple(code[m:])
    return first, rest


def _first_branch_ok(code: Sequence[int]) -> bool:
    first, rest = split_first_branch(code)
    return (len(first), first) <= (len(rest), rest)


def free_canonical(t: Tree) -> CanonicalCode:
    """Isomorphism-invariant code: the canonical depth sequence rooted at a centre.

    With two centres, the root is the centre whose own side is at least as
    large as the other side under (vertex count, depth sequence) order.
    """
    centers = tree_centers(t)
    code = _canonical_levels(t.adjacency, centers[0])
    if len(centers) == 2 and not _first_branch_ok(code):
        code = _canonical_levels(t.adjacency, centers[1])
    return CanonicalCode(code, "free")


def vertex_orbits(t: Tree) -> list[list[int]]:
    """Partition vertices by rooted-isomorphism type, ordered by smallest member."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(t.n):
        groups.setdefault(_canonical_levels(t.adjacency, v), []).append(v)
    return sorted(groups.values(), key=lambda g: g[0])


# --- text format ------------------------------------------------------------


def format_tree(t: Tree) -> str:
    lines = [str(t.n)] + [f"{u} {v}" for u, v in t.edges]
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> Tree:
    """Parse ``n`` followed by ``n - 1`` lines ``u v``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise TreeError("empty tree file")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise TreeError(f"expected 'u v', got {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, TreeError):
            raise
        raise TreeError(f"non-integer token: {exc}") from None
    if len(edges) != n - 1:
        raise TreeError(f"expected {n - 1} edges for n={n}, got {len(edges)}")
    return tree_from_edges(n, edges)
