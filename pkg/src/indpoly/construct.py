"""Witness trees with symmetric unimodal independence polynomials, and the
exhaustive checks behind the excluded orders and degree."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .classify import admissibility_certificate, analyze_tree
from .enumeration import free_trees_stream
from .polynomial import is_symmetric
from .tree import RootedTree, Tree, bridge, builtin_tree, independence_polynomial

EXCLUDED_ORDERS = frozenset({2, 4, 5, 7, 10})
EXCLUDED_DEGREES = frozenset({3})
SMALL_CATERPILLAR_ORDERS = {8: "G8", 11: "G11", 13: "G13", 14: "G14", 16: "G16", 17: "G17"}
SMALL_CATERPILLAR_DEGREES = {5: "G8", 7: "G11", 9: "G14", 11: "G17"}


class Unrepresentable(ValueError):
    """No tree with a symmetric independence polynomial exists for the request."""


class ConstructionError(AssertionError):
    """A construction failed its own post-validation."""


@dataclass(frozen=True)
class ConstructionResult:
    tree: Tree
    recipe: dict = field(hash=False, compare=False)
    root: int | None = None


def r3_chain(base: RootedTree, bridges: int, check: bool = False) -> RootedTree:
    """``bridges`` left-bridges of R3 onto ``base``: ``T_j = R3 v T_{j-1}``.

    With ``check`` set, every intermediate tree is re-certified as admissible.
    """
    r3 = builtin_tree("R3")
    cur = base
    for j in range(bridges):
        cur = bridge(r3, cur)
        if check and not admissibility_certificate(cur):
            raise ConstructionError(f"bridge step {j + 1} lost admissibility")
    return cur


def build(recipe: dict) -> ConstructionResult:
    """Rebuild a construction from its recipe."""
    if "caterpillar" in recipe:
        name = recipe["caterpillar"]
        return ConstructionResult(builtin_tree(name), dict(recipe))
    base = builtin_tree(recipe["base"])
    rt = r3_chain(base, recipe.get("r3_bridges", 0))
    return ConstructionResult(rt.tree, dict(recipe), rt.root)


def _validated(result: ConstructionResult, *, n: int | None = None, d: int | None = None) -> ConstructionResult:
    rec = analyze_tree(result.tree)
    if not (rec.symmetric and rec.unimodal):
        raise ConstructionError(f"recipe {result.recipe} does not give a symmetric unimodal polynomial")
    if n is not None and result.tree.n != n:
        raise ConstructionError(f"recipe {result.recipe} has {result.tree.n} vertices, wanted {n}")
    if d is not None and rec.poly.degree != d:
        raise ConstructionError(f"recipe {result.recipe} has degree {rec.poly.degree}, wanted {d}")
    return result


def recipe_for_order(n: int) -> dict:
    if n < 1:
        raise ValueError("order must be at least 1")
    if n in EXCLUDED_ORDERS:
        raise Unrepresentable(
            f"n={n}: there is no tree with a symmetric independence polynomial on {n} vertices"
        )
    if n == 1:
        return {"base": "K1"}
    if n % 3 == 0:
        return {"base": "R3", "r3_bridges": n // 3 - 1}
    if n in SMALL_CATERPILLAR_ORDERS:
        return {"caterpillar": SMALL_CATERPILLAR_ORDERS[n]}
    base = "R19" if n % 3 == 1 else "R20"
    size = 19 if base == "R19" else 20
    return {"base": base, "r3_bridges": (n - size) // 3}


def recipe_for_degree(d: int) -> dict:
    if d < 1:
        raise ValueError("degree must be at least 1")
    if d in EXCLUDED_DEGREES:
        raise Unrepresentable(
            "d=3: a symmetric degree-3 tree polynomial forces n^2 - 5n + 2 = 0, "
            "which has no integer solution"
        )
    if d == 1:
        return {"base": "K1"}
    if d % 2 == 0:
        return {"base": "R3", "r3_bridges": d // 2 - 1}
    if d in SMALL_CATERPILLAR_DEGREES:
        return {"caterpillar": SMALL_CATERPILLAR_DEGREES[d]}
    return {"base": "R19", "r3_bridges": (d - 13) // 2}


def tree_on_n_vertices(n: int) -> ConstructionResult:
    return _validated(build(recipe_for_order(n)), n=n)


def tree_of_degree(d: int) -> ConstructionResult:
    return _validated(build(recipe_for_degree(d)), d=d)


@dataclass(frozen=True)
class ImpossibilityReport:
    kind: str
    value: int
    trees_scanned: int
    witnesses: int
    orders_scanned: tuple[int, ...]
    quadratic_checked_up_to: int | None = None
    quadratic_roots: int | None = None

    @property
    def holds(self) -> bool:
        return self.witnesses == 0 and not self.quadratic_roots


# largest order a degree-3 tree can have: alpha(T) >= ceil(n/2) for bipartite T
DEGREE3_MAX_ORDER = 7
QUADRATIC_BOUND = 10**6


def _quadratic_integer_roots(limit: int) -> int:
    # n^2 - 5n + 2 = 0 has discriminant 17, never a perfect square
    disc = 25 - 8
    assert isqrt(disc) ** 2 != disc
    return sum(1 for n in range(1, limit + 1) if n * n - 5 * n + 2 == 0)


def impossibility_report(kind: str, value: int) -> ImpossibilityReport:
    """Exhaustively confirm an excluded case.

    ``kind="order"`` scans every tree on ``value`` vertices for a symmetric
    polynomial; ``kind="degree"`` (``value`` must be 3) scans every tree with at
    most 7 vertices for a symmetric degree-3 polynomial and checks the
    quadratic ``n^2 - 5n + 2`` for integer roots.
    """
    if kind == "order":
        if value not in EXCLUDED_ORDERS:
            raise ValueError(f"order {value} is not one of the excluded orders {sorted(EXCLUDED_ORDERS)}")
        scanned = witnesses = 0
        for t in free_trees_stream(value):
            scanned += 1
            if is_symmetric(independence_polynomial(t)):
                witnesses += 1
        return ImpossibilityReport("order", value, scanned, witnesses, (value,))
    if kind == "degree":
        if value not in EXCLUDED_DEGREES:
            raise ValueError(f"degree {value} is not an excluded degree")
        scanned = witnesses = 0
        orders = tuple(range(1, DEGREE3_MAX_ORDER + 1))
        for n in orders:
            for t in free_trees_stream(n):
                scanned += 1
                p = independence_polynomial(t)
                if p.degree == 3 and is_symmetric(p):
                    witnesses += 1
        roots = _quadratic_integer_roots(QUADRATIC_BOUND)
        return ImpossibilityReport("degree", value, scanned, witnesses, orders, QUADRATIC_BOUND, roots)
    raise ValueError(f"unknown impossibility kind {kind!r}")
