"""Sublinear average-degree estimation (ERS / ERS-gen) with exact validators."""

from ._avgdeg import (
    EstimateReport,
    Graph,
    InstanceTooLarge,
    InvalidState,
    LoadError,
    NoNeighborError,
    OracleSession,
    check_cn_bound,
    check_sqrt2m_bound,
    cn_sum,
    degeneracy,
    draw_sample,
    ers,
    ers_gen,
    estimate_n_birthday,
    exact_arboricity,
    exact_moments,
    forest_decomposition,
    generate,
    out_degrees,
    precedes,
    read_edge_list,
    termination_profile,
    validate_graph,
    write_edge_list,
)

__all__ = [name for name in dir() if not name.startswith("_")]
