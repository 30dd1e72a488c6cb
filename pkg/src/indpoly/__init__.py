"""Independence polynomials of trees: symmetry, unimodality and gamma-positivity."""

from __future__ import annotations

__version__ = "0.1.0"

from .classify import (
    AdmissibilityCertificate,
    NotAdmissible,
    ScanSummary,
    TreeRecord,
    admissibility_certificate,
    analyze_tree,
    bridge_ready,
    scan_order,
)
from .construct import Unrepresentable, impossibility_report, tree_of_degree, tree_on_n_vertices
from .enumeration import count_free_trees, free_trees_stream
from .polynomial import (
    GammaDecomposition,
    IntPolynomial,
    gamma_compose,
    gamma_expand,
    is_symmetric,
    is_unimodal_symmetric,
    render,
)
from .tree import (
    RootedTree,
    Tree,
    bridge,
    builtin_tree,
    corona_two_leaves,
    free_canonical,
    independence_polynomial,
    rooted_canonical,
    tree_from_edges,
)

__all__ = [name for name in dir() if not name.startswith("_")]
