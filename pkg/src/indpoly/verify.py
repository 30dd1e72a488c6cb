"""Reproduction checks for the published counts, polynomials and constructions.

Each check returns a ``CheckResult``; ``run_checks`` drives them for the CLI
and the acceptance tests.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import _kernels
from .classify import (
    AdmissibilityCertificate,
    ScanSummary,
    TreeRecord,
    admissibility_certificate,
    analyze_tree,
    scan_order,
)
from .construct import (
    EXCLUDED_DEGREES,
    EXCLUDED_ORDERS,
    Unrepresentable,
    impossibility_report,
    tree_of_degree,
    tree_on_n_vertices,
)
from .enumeration import free_trees_stream
from .polynomial import (
    GammaDecomposition,
    IntPolynomial,
    gamma_compose,
    gamma_expand,
    is_symmetric,
    is_unimodal_symmetric,
)
from .tree import (
    RootedTree,
    Tree,
    bridge,
    builtin_tree,
    corona_two_leaves,
    independence_polynomial,
    independence_polynomial_bruteforce,
    random_tree,
    remove_vertices,
    tree_from_edges,
    tree_from_level_sequence,
)

# n -> (nonisomorphic trees, symmetric trees, gamma-admissible trees)
REFERENCE_TABLE = {
    3: (1, 1, 1),
    4: (2, 0, 0),
    5: (3, 0, 0),
    6: (6, 1, 1),
    7: (11, 0, 0),
    8: (23, 1, 0),
    9: (47, 1, 1),
    10: (106, 0, 0),
    11: (235, 2, 0),
    12: (551, 3, 2),
    13: (1301, 3, 0),
    14: (3159, 1, 0),
    15: (7741, 4, 3),
    16: (19320, 2, 0),
    17: (48629, 4, 0),
    18: (123867, 15, 6),
    19: (317955, 6, 1),
    20: (823065, 14, 1),
    21: (2144505, 22, 14),
}

# n -> distinct symmetric polynomials, from the catalogue summary
REFERENCE_DISTINCT = {
    1: 1, 2: 0, 3: 1, 4: 0, 5: 0, 6: 1, 7: 0, 8: 1, 9: 1, 10: 0, 11: 1,
    12: 2, 13: 3, 14: 1, 15: 3, 16: 2, 17: 3, 18: 11, 19: 5, 20: 8, 21: 16,
}

REFERENCE_POLYS = {
    "R19": (1, 19, 153, 701, 2058, 4112, 5772, 5772, 4112, 2058, 701, 153, 19, 1),
    "R19-r": (1, 18, 139, 616, 1763, 3462, 4817, 4817, 3462, 1763, 616, 139, 18, 1),
    "R20": (1, 20, 171, 829, 2548, 5255, 7496, 7496, 5255, 2548, 829, 171, 20, 1),
    "R20-r": (1, 19, 155, 722, 2151, 4343, 6129, 6129, 4343, 2151, 722, 155, 19, 1),
    "G8": (1, 8, 21, 21, 8, 1),
    "G11": (1, 11, 45, 88, 88, 45, 11, 1),
    "G13": (1, 13, 66, 176, 279, 279, 176, 66, 13, 1),
    "G14": (1, 14, 78, 226, 377, 377, 226, 78, 14, 1),
    "G16": (1, 16, 105, 369, 764, 970, 764, 369, 105, 16, 1),
    "G17": (1, 17, 120, 465, 1101, 1676, 1676, 1101, 465, 120, 17, 1),
}

FAST_TIER_SECONDS = 5.0
FULL_TIER_SECONDS = 60.0
ORACLE_SECONDS = 10.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


@lru_cache(maxsize=None)
def cached_scan(n: int) -> tuple[ScanSummary, tuple[TreeRecord, ...]]:
    summary, records = scan_order(n, jobs=1, engine="fast")
    return summary, tuple(records)


def _warm_kernels() -> None:
    _kernels.scan_shard(4, 0, 1, 256)


def _table_rows(orders) -> tuple[list[str], float]:
    _warm_kernels()
    start = time.perf_counter()
    bad = []
    for n in orders:
        s, _ = cached_scan(n)
        got = (s.total_trees, s.symmetric_count, s.gamma_admissible_count)
        if got != REFERENCE_TABLE[n]:
            bad.append(f"n={n}: got {got}, expected {REFERENCE_TABLE[n]}")
        if s.distinct_symmetric_polys != REFERENCE_DISTINCT[n]:
            bad.append(f"n={n}: {s.distinct_symmetric_polys} distinct polynomials, expected {REFERENCE_DISTINCT[n]}")
    return bad, time.perf_counter() - start


def check_table_fast() -> CheckResult:
    bad, secs = _table_rows(range(3, 17))
    ok = not bad and secs < FAST_TIER_SECONDS
    return CheckResult("table rows 3-16", ok, "; ".join(bad) or f"all rows exact in {secs:.2f}s (limit {FAST_TIER_SECONDS}s)")


def check_table_full(max_n: int = 21) -> CheckResult:
    bad, secs = _table_rows(range(17, max_n + 1))
    ok = not bad and secs < FULL_TIER_SECONDS
    return CheckResult(
        f"table rows 17-{max_n}",
        ok,
        "; ".join(bad) or f"all rows exact incl. distinct counts in {secs:.2f}s (limit {FULL_TIER_SECONDS}s)",
    )


def _pinned_polys() -> dict[str, IntPolynomial]:
    out = {}
    for name in ("R19", "R20"):
        rt = builtin_tree(name)
        out[name] = independence_polynomial(rt.tree)
        out[f"{name}-r"] = independence_polynomial(remove_vertices(rt.tree, [rt.root]))
    for name in ("G8", "G11", "G13", "G14", "G16", "G17"):
        out[name] = independence_polynomial(builtin_tree(name))
    return out


def check_pinned_polynomials() -> CheckResult:
    got = _pinned_polys()
    bad = [k for k, v in REFERENCE_POLYS.items() if got[k].coeffs != v]
    return CheckResult("pinned polynomials", not bad, f"mismatch: {bad}" if bad else f"{len(REFERENCE_POLYS)} exact")


def check_gamma_factorizations() -> CheckResult:
    bad = []
    r19 = gamma_expand(independence_polynomial(builtin_tree("R19").tree))
    if (r19.d, r19.gammas) != (13, (1, 6, 9, 4, 1, 0, 0)):
        bad.append(f"R19 gives {r19}")
    r20 = gamma_expand(independence_polynomial(builtin_tree("R20").tree))
    if (r20.d, r20.gammas) != (13, (1, 7, 16, 14, 4, 0, 0)):
        bad.append(f"R20 gives {r20}")
    r3 = admissibility_certificate(builtin_tree("R3"))
    if r3 != AdmissibilityCertificate(2, IntPolynomial([1, 1]), IntPolynomial([1])):
        bad.append(f"R3 gives {r3}")
    return CheckResult("gamma factorizations", not bad, "; ".join(bad) or "R19, R20, R3 exact")


def check_oracle_equivalence(random_trees: int = 1000, seed: int = 20260401) -> CheckResult:
    start = time.perf_counter()
    exhaustive = 0
    bad = []
    for n in range(1, 11):
        for t in free_trees_stream(n):
            exhaustive += 1
            if independence_polynomial(t) != independence_polynomial_bruteforce(t):
                bad.append(f"n={n} edges={t.edges}")
    rng = random.Random(seed)
    for _ in range(random_trees):
        t = random_tree(rng.randint(11, 20), rng)
        if independence_polynomial(t) != independence_polynomial_bruteforce(t):
            bad.append(f"random n={t.n} edges={t.edges}")
    secs = time.perf_counter() - start
    ok = not bad and secs < ORACLE_SECONDS
    detail = f"{exhaustive} exhaustive + {random_trees} random trees agree in {secs:.2f}s (limit {ORACLE_SECONDS}s)"
    return CheckResult("DP equals brute force", ok, "; ".join(bad[:3]) or detail)


def random_rooted_tree(rng: random.Random, lo: int = 1, hi: int = 12) -> RootedTree:
    t = random_tree(rng.randint(lo, hi), rng)
    return RootedTree(t, rng.randrange(t.n))


def bridge_identity_holds(left: RootedTree, right: RootedTree) -> bool:
    w = bridge(left, right)
    p_t = independence_polynomial(left.tree)
    p_t_r = independence_polynomial(remove_vertices(left.tree, [left.root]))
    p_u = independence_polynomial(right.tree)
    p_u_s = independence_polynomial(remove_vertices(right.tree, [right.root]))
    return independence_polynomial(w.tree) == p_t_r * p_u + (p_t - p_t_r) * p_u_s


def admissible_pools(max_n: int = 15) -> tuple[list[RootedTree], list[RootedTree]]:
    """(bridge-ready rooted trees, admissible rooted trees) from scans and named trees."""
    ready, admissible = [], []
    for n in range(1, max_n + 1):
        _, records = cached_scan(n)
        for rec in records:
            t = tree_from_level_sequence(rec.code)
            for orb in rec.admissible_orbits:
                rt = RootedTree(t, orb.rep)
                admissible.append(rt)
                if orb.bridge_ready:
                    ready.append(rt)
    for name in ("R19", "R20"):
        rt = builtin_tree(name)
        admissible.append(rt)
        ready.append(rt)
    return ready, admissible


def composed_certificate(left: AdmissibilityCertificate, right: AdmissibilityCertificate) -> AdmissibilityCertificate:
    a, b, c, d = left.A, left.B, right.A, right.B
    return AdmissibilityCertificate(left.d + right.d, b * c + (a - b) * d, b * c)


def check_bridge_lemma(pairs: int = 500, admissible_pairs: int = 200, seed: int = 7) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for _ in range(pairs):
        left, right = random_rooted_tree(rng), random_rooted_tree(rng)
        if not bridge_identity_holds(left, right):
            bad.append(f"identity fails for {left} v {right}")
    ready, admissible = admissible_pools()
    for _ in range(admissible_pairs):
        left, right = rng.choice(ready), rng.choice(admissible)
        expected = composed_certificate(admissibility_certificate(left), admissibility_certificate(right))
        got = admissibility_certificate(bridge(left, right))
        if got != expected:
            bad.append(f"certificate mismatch: {got} vs {expected}")
    detail = f"{pairs} identity pairs, {admissible_pairs} admissible pairs"
    return CheckResult("bridge lemma", not bad, "; ".join(bad[:3]) or detail)


def random_symmetric_polynomial(rng: random.Random, max_degree: int = 30, bound: int = 1000) -> IntPolynomial:
    d = rng.randint(0, max_degree)
    half = [rng.randint(-bound, bound) for _ in range(d // 2 + 1)]
    while half[0] == 0:
        half[0] = rng.randint(-bound, bound)
    coeffs = [half[min(i, d - i)] for i in range(d + 1)]
    return IntPolynomial(coeffs)


def check_gamma_round_trip(samples: int = 1000, seed: int = 11) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        p = random_symmetric_polynomial(rng)
        if gamma_compose(gamma_expand(p)) != p:
            bad.append(f"round trip fails for {p}")
        # gamma_0 > 0 keeps h(0) != 0, so the centre of symmetry is deg(h) / 2
        d = rng.randint(0, 30)
        g = GammaDecomposition(d, [rng.randint(1, 50)] + [rng.randint(0, 50) for _ in range(d // 2)])
        h = gamma_compose(g)
        if h.degree != d or not (is_symmetric(h) and is_unimodal_symmetric(h)):
            bad.append(f"gamma-positive {g} gives {h}")
    return CheckResult("gamma round trip", not bad, "; ".join(bad[:3]) or f"{samples} polynomials")


def corona_formula(t: Tree) -> IntPolynomial:
    g = independence_polynomial_bruteforce(t)
    n = t.n
    total = IntPolynomial()
    for i, gi in enumerate(g.coeffs):
        total = total + (IntPolynomial.one_plus_x_pow(2 * n - 2 * i) * gi).shift(i)
    return total


def check_corona(max_n: int = 7) -> CheckResult:
    bad = []
    count = 0
    for n in range(1, max_n + 1):
        for t in free_trees_stream(n):
            count += 1
            if independence_polynomial(corona_two_leaves(t)) != corona_formula(t):
                bad.append(f"n={n} edges={t.edges}")
    return CheckResult("corona formula", not bad, "; ".join(bad[:3]) or f"{count} trees with n <= {max_n}")


def check_constructions(max_value: int = 60) -> CheckResult:
    bad = []
    for n in range(1, max_value + 1):
        if n in EXCLUDED_ORDERS:
            try:
                tree_on_n_vertices(n)
                bad.append(f"order {n} should be unrepresentable")
            except Unrepresentable:
                pass
            rep = impossibility_report("order", n)
            if not rep.holds:
                bad.append(f"order {n}: {rep}")
            if n == 10 and rep.trees_scanned != 106:
                bad.append(f"order 10 scanned {rep.trees_scanned} trees")
            continue
        res = tree_on_n_vertices(n)
        rec = analyze_tree(res.tree)
        if res.tree.n != n or not (rec.symmetric and rec.unimodal):
            bad.append(f"order {n} witness invalid")
    for d in range(1, max_value + 1):
        if d in EXCLUDED_DEGREES:
            try:
                tree_of_degree(d)
                bad.append(f"degree {d} should be unrepresentable")
            except Unrepresentable:
                pass
            rep = impossibility_report("degree", d)
            if not rep.holds:
                bad.append(f"degree {d}: {rep}")
            continue
        res = tree_of_degree(d)
        rec = analyze_tree(res.tree)
        if rec.poly.degree != d or not (rec.symmetric and rec.unimodal):
            bad.append(f"degree {d} witness invalid")
    return CheckResult("construction sweeps", not bad, "; ".join(bad[:3]) or f"orders and degrees up to {max_value}")


def _orbit_signature(rec: TreeRecord) -> list[tuple[int, tuple[int, ...]]]:
    return sorted((o.size, o.certificate.B.coeffs) for o in rec.admissible_orbits)


SPIDER_18 = corona_two_leaves(tree_from_edges(6, [(0, k) for k in range(1, 6)]))


def check_orbit_fixtures() -> CheckResult:
    bad = []
    r19 = analyze_tree(builtin_tree("R19").tree)
    if _orbit_signature(r19) != [(1, (1, 5, 6, 1))]:
        bad.append(f"R19 orbits {_orbit_signature(r19)}")
    six = analyze_tree(bridge(builtin_tree("R3"), builtin_tree("R3")).tree)
    if _orbit_signature(six) != [(2, (1, 1))]:
        bad.append(f"order-6 orbits {_orbit_signature(six)}")
    s18 = analyze_tree(SPIDER_18)
    want = [(1, (1, 5, 10, 10, 5, 1)), (5, (1, 5, 6, 4, 1))]
    if _orbit_signature(s18) != want or any(o.certificate.A.coeffs != (1, 6, 10, 10, 5, 1) for o in s18.admissible_orbits):
        bad.append(f"corona of K1,5 orbits {_orbit_signature(s18)}")
    return CheckResult("orbit fixtures", not bad, "; ".join(bad) or "R19, order 6, corona of K1,5")


def checks(max_n: int = 16) -> list[Callable[[], CheckResult]]:
    out = [
        check_table_fast,
        check_pinned_polynomials,
        check_gamma_factorizations,
        check_oracle_equivalence,
        check_bridge_lemma,
        check_gamma_round_trip,
        check_corona,
        check_constructions,
        check_orbit_fixtures,
    ]
    if max_n >= 17:
        out.insert(1, lambda: check_table_full(min(max_n, 21)))
    return out


def run_checks(max_n: int = 16) -> list[CheckResult]:
    results = []
    for fn in checks(max_n):
        try:
            results.append(fn())
        except Exception as exc:  # a crashing check is a failed check
            results.append(CheckResult(getattr(fn, "__name__", "check"), False, f"{type(exc).__name__}: {exc}"))
    return results
