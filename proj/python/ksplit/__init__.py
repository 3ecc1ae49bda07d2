"""Splits of complete graphs that avoid a forbidden subgraph.

Thin wrapper over the C++ core. Reports come back as plain dicts with the
same keys as the CLI's JSON output.
"""

from ._core import (
    Field,
    ForbiddenGraph,
    Graph,
    KsplitError,
    SplitGraph,
    build_affine_split,
    build_bipartite_split,
    build_star_free_split,
    concentration_report,
    construct_c4_free_split,
    contains_subgraph,
    contract_blobs,
    estimate_pair_failure,
    find_forbidden,
    is_c4_free,
    is_kst_free,
    janson_diagnostics,
    necessary_k_lower,
    next_prime,
    prune_to_split,
    ramsey_bounds,
    random_split,
    read_graph_file,
    read_split_file,
    restrict_blobs,
    run_cli,
    split_bounds,
    split_from_coloring,
    star_split_k,
    trim_max_degree,
    turan_bound,
    verify_split,
    write_split_file,
)


def error_kind(exc: KsplitError) -> str:
    """The failure class of a library error, e.g. "NotALaxSplit"."""
    return str(exc).split(":", 1)[0]


def forbidden(spec: str) -> ForbiddenGraph:
    return ForbiddenGraph.parse(spec)


__all__ = [name for name in dir() if not name.startswith("_")]
