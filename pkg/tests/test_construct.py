from __future__ import annotations

import pytest

from indpoly.classify import admissibility_certificate, analyze_tree
from indpoly.construct import (
    EXCLUDED_ORDERS,
    ConstructionError,
    Unrepresentable,
    build,
    impossibility_report,
    r3_chain,
    recipe_for_degree,
    recipe_for_order,
    tree_of_degree,
    tree_on_n_vertices,
)
from indpoly.polynomial import IntPolynomial as P
from indpoly.tree import builtin_tree, free_canonical, independence_polynomial


def test_order_3():
    assert independence_polynomial(tree_on_n_vertices(3).tree) == P([1, 3, 1])


@pytest.mark.parametrize("n", sorted(EXCLUDED_ORDERS))
def test_excluded_orders(n):
    with pytest.raises(Unrepresentable, match="no tree with a symmetric independence polynomial"):
        tree_on_n_vertices(n)


def test_order_22():
    res = tree_on_n_vertices(22)
    assert res.recipe == {"base": "R19", "r3_bridges": 1}
    rec = analyze_tree(res.tree)
    assert rec.symmetric and rec.unimodal and rec.poly.degree == 15


def test_degrees():
    assert independence_polynomial(tree_of_degree(4).tree) == P([1, 6, 10, 6, 1])
    res = tree_of_degree(15)
    assert res.tree.n == 22 and independence_polynomial(res.tree).degree == 15
    with pytest.raises(Unrepresentable, match="no integer solution"):
        tree_of_degree(3)
    with pytest.raises(ValueError):
        tree_of_degree(0)


@pytest.mark.parametrize("n", [m for m in range(1, 41) if m not in EXCLUDED_ORDERS])
def test_order_sweep(n):
    res = tree_on_n_vertices(n)
    assert res.tree.n == n
    rec = analyze_tree(res.tree)
    assert rec.symmetric and rec.unimodal


@pytest.mark.parametrize("d", [d for d in range(1, 41) if d != 3])
def test_degree_sweep(d):
    p = independence_polynomial(tree_of_degree(d).tree)
    assert p.degree == d


def test_recipes_reproducible():
    for n in (9, 19, 20, 23, 29, 31):
        a, b = tree_on_n_vertices(n), build(recipe_for_order(n))
        assert free_canonical(a.tree) == free_canonical(b.tree)
    assert recipe_for_degree(17) == {"base": "R19", "r3_bridges": 2}


@pytest.mark.parametrize("base", ["R3", "R19", "R20"])
def test_chain_stays_admissible(base):
    rt = r3_chain(builtin_tree(base), 5, check=True)
    assert admissibility_certificate(rt)


def test_chain_check_catches_failure():
    # R3 bridged onto a 2-vertex path has 5 vertices, an order with no symmetric tree
    from indpoly.tree import RootedTree, tree_from_edges

    bad = RootedTree(tree_from_edges(2, [(0, 1)]), 0)
    with pytest.raises(ConstructionError):
        r3_chain(bad, 1, check=True)


def test_impossibility_orders():
    r10 = impossibility_report("order", 10)
    assert (r10.trees_scanned, r10.witnesses, r10.holds) == (106, 0, True)
    r4 = impossibility_report("order", 4)
    assert (r4.trees_scanned, r4.witnesses) == (2, 0)
    with pytest.raises(ValueError):
        impossibility_report("order", 6)


def test_impossibility_degree3():
    r = impossibility_report("degree", 3)
    assert r.witnesses == 0 and r.quadratic_roots == 0 and r.holds
    assert r.orders_scanned == tuple(range(1, 8))
