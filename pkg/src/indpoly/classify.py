"""Per-tree classification (symmetry, unimodality, gamma-admissible roots) and order scans."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable

from . import _kernels
from .enumeration import TreeStream
from .polynomial import (
    IntPolynomial,
    gamma_expand,
    is_symmetric,
    is_unimodal_symmetric,
)
from .tree import (
    RootedTree,
    Tree,
    free_canonical,
    independence_polynomial,
    remove_vertices,
    tree_from_level_sequence,
    vertex_orbits,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmissibilityCertificate:
    """``P_T = (1+x)^d A(y)`` and ``P_{T-r} = (1+x)^d B(y)`` with ``y = x/(1+x)^2``."""

    d: int
    A: IntPolynomial
    B: IntPolynomial

    def __bool__(self) -> bool:
        return True

    @property
    def difference(self) -> IntPolynomial:
        return self.A - self.B


@dataclass(frozen=True)
class NotAdmissible:
    reason: str

    def __bool__(self) -> bool:
        return False


def admissibility_certificate(
    rt: RootedTree, poly: IntPolynomial | None = None
) -> AdmissibilityCertificate | NotAdmissible:
    """Check gamma-admissibility of ``rt``; falsy verdict names the first failed condition.

    ``poly`` may carry a precomputed ``P_T``.
    """
    p_t = poly if poly is not None else independence_polynomial(rt.tree)
    p_del = independence_polynomial(remove_vertices(rt.tree, [rt.root]))
    d = p_t.degree
    if p_del.degree != d:
        return NotAdmissible(f"deg P_T = {d} but deg P_(T-r) = {p_del.degree}")
    if not is_symmetric(p_t):
        return NotAdmissible("P_T is not symmetric")
    if not is_symmetric(p_del):
        return NotAdmissible("P_(T-r) is not symmetric")
    a = gamma_expand(p_t)
    if not a.is_gamma_positive:
        return NotAdmissible("A(y) has a negative coefficient")
    b = gamma_expand(p_del)
    if not b.is_gamma_positive:
        return NotAdmissible("B(y) has a negative coefficient")
    return AdmissibilityCertificate(d, a.as_polynomial(), b.as_polynomial())


def bridge_ready(rt: RootedTree) -> tuple[bool, IntPolynomial | None]:
    """Whether ``rt`` can be the left operand of the bridge construction.

    Returns the verdict and ``A - B`` (``None`` when ``rt`` is not admissible).
    """
    cert = admissibility_certificate(rt)
    if not cert:
        return False, None
    diff = cert.difference
    return diff.is_nonnegative(), diff


@dataclass(frozen=True)
class AdmissibleOrbit:
    rep: int
    size: int
    certificate: AdmissibilityCertificate
    bridge_ready: bool

    def to_json(self) -> dict:
        c = self.certificate
        return {
            "rep": self.rep,
            "size": self.size,
            "d": c.d,
            "A": list(c.A.coeffs),
            "B": list(c.B.coeffs),
            "bridge_ready": self.bridge_ready,
        }


@dataclass(frozen=True)
class TreeRecord:
    code: tuple[int, ...]
    n: int
    poly: IntPolynomial
    symmetric: bool
    unimodal: bool | None
    admissible_orbits: tuple[AdmissibleOrbit, ...] = ()

    @property
    def gamma_admissible(self) -> bool:
        return bool(self.admissible_orbits)

    @property
    def bridge_ready_roots(self) -> tuple[AdmissibleOrbit, ...]:
        return tuple(o for o in self.admissible_orbits if o.bridge_ready)

    def to_json(self) -> dict:
        return {
            "code": list(self.code),
            "n": self.n,
            "poly": list(self.poly.coeffs),
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "admissible_orbits": [o.to_json() for o in self.admissible_orbits],
        }

    @classmethod
    def from_json(cls, obj: dict) -> TreeRecord:
        orbits = tuple(
            AdmissibleOrbit(
                o["rep"],
                o["size"],
                AdmissibilityCertificate(o["d"], IntPolynomial(o["A"]), IntPolynomial(o["B"])),
                o["bridge_ready"],
            )
            for o in obj["admissible_orbits"]
        )
        return cls(tuple(obj["code"]), obj["n"], IntPolynomial(obj["poly"]), obj["symmetric"], obj["unimodal"], orbits)


def analyze_tree(t: Tree, *, all_vertices: bool = False) -> TreeRecord:
    """Classify ``t``.

    Admissibility is decided once per rooted-isomorphism orbit and shared by the
    orbit; ``all_vertices=True`` checks every vertex and verifies that the
    members of each orbit agree.
    """
    poly = independence_polynomial(t)
    code = free_canonical(t).code
    if not is_symmetric(poly):
        return TreeRecord(code, t.n, poly, False, None)
    unimodal = is_unimodal_symmetric(poly)
    orbits = []
    for orbit in vertex_orbits(t):
        rep = orbit[0]
        cert = admissibility_certificate(RootedTree(t, rep), poly)
        if all_vertices:
            for v in orbit[1:]:
                other = admissibility_certificate(RootedTree(t, v), poly)
                if other != cert:
                    raise AssertionError(f"orbit {orbit} disagrees at vertex {v}: {other} vs {cert}")
        if cert:
            orbits.append(AdmissibleOrbit(rep, len(orbit), cert, cert.difference.is_nonnegative()))
    return TreeRecord(code, t.n, poly, True, unimodal, tuple(orbits))


@dataclass(frozen=True)
class ScanSummary:
    n: int
    total_trees: int
    symmetric_count: int
    distinct_symmetric_polys: int
    gamma_admissible_count: int

    def row(self) -> str:
        return (
            f"{self.n} {self.total_trees} {self.symmetric_count} "
            f"{self.distinct_symmetric_polys} {self.gamma_admissible_count}"
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total_trees": self.total_trees,
            "symmetric_trees": self.symmetric_count,
            "distinct_symmetric_polys": self.distinct_symmetric_polys,
            "gamma_admissible_trees": self.gamma_admissible_count,
        }

    @classmethod
    def from_json(cls, obj: dict) -> ScanSummary:
        return cls(
            obj["n"],
            obj["total_trees"],
            obj["symmetric_trees"],
            obj["distinct_symmetric_polys"],
            obj["gamma_admissible_trees"],
        )


def summarize(n: int, total: int, records: Iterable[TreeRecord]) -> ScanSummary:
    sym = [r for r in records if r.symmetric]
    return ScanSummary(
        n,
        total,
        len(sym),
        len({r.poly for r in sym}),
        sum(1 for r in sym if r.gamma_admissible),
    )


def default_jobs() -> int:
    return max(1, int(os.environ.get("INDPOLY_JOBS", "1")))


def _fast_shard(args: tuple[int, int, int, int]) -> tuple[int, list[tuple[int, ...]]]:
    n, shard, shards, block = args
    count, hits = _kernels.scan_shard(n, shard, shards, block)
    return int(count), [tuple(int(x) for x in row) for row in hits]


def _exact_shard(args: tuple[int, int, int, int, bool]) -> tuple[int, list[TreeRecord]]:
    n, shard, shards, block, keep_all = args
    count = 0
    kept = []
    for t in TreeStream(n, shard=shard, shards=shards, block=block):
        count += 1
        rec = analyze_tree(t)
        if keep_all or rec.symmetric:
            kept.append(rec)
    return count, kept


def scan_order(
    n: int,
    *,
    jobs: int | None = None,
    engine: str = "auto",
    keep: str = "symmetric",
    block: int = 256,
) -> tuple[ScanSummary, list[TreeRecord]]:
    """Classify every free tree of order ``n``.

    ``engine="fast"`` filters with the compiled int64 kernel and runs the exact
    analysis only on trees whose polynomial is symmetric; ``"exact"`` analyses
    every tree with arbitrary-precision arithmetic.  ``keep`` selects which
    records are returned: ``"none"``, ``"symmetric"`` or ``"all"`` (exact only).
    With one job, records follow the enumeration order; otherwise they are
    sorted by canonical code.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    jobs = jobs or default_jobs()
    if engine == "auto":
        engine = "exact" if keep == "all" or n > _kernels.FAST_MAX_N else "fast"
    if engine == "fast" and keep == "all":
        raise ValueError("keep='all' needs the exact engine")
    if engine == "fast" and n > _kernels.FAST_MAX_N:
        raise ValueError(f"fast engine supports n <= {_kernels.FAST_MAX_N}")
    if engine not in ("fast", "exact"):
        raise ValueError(f"unknown engine {engine!r}")

    if engine == "fast":
        tasks = [(n, s, jobs, block) for s in range(jobs)]
        parts = _run(_fast_shard, tasks, jobs)
        total = sum(c for c, _ in parts)
        records = []
        for _, seqs in parts:
            for seq in seqs:
                rec = analyze_tree(tree_from_level_sequence(seq))
                if not rec.symmetric:
                    raise AssertionError(f"kernel and exact analysis disagree on symmetry of {seq}")
                records.append(rec)
    else:
        tasks = [(n, s, jobs, block, keep == "all") for s in range(jobs)]
        parts = _run(_exact_shard, tasks, jobs)
        total = sum(c for c, _ in parts)
        records = [r for _, recs in parts for r in recs]

    if jobs > 1:
        records.sort(key=lambda r: r.code)
    summary = summarize(n, total, records)
    log.info("scanned n=%d: %s", n, summary.row())
    return summary, ([] if keep == "none" else records)


def _run(fn, tasks, jobs):
    if jobs == 1:
        return [fn(t) for t in tasks]
    with Pool(jobs) as pool:
        return pool.map(fn, tasks)
