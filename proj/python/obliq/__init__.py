"""Oblique projections and fusion frames."""

from ._obliq import (
    Error,
    ObliqueProjection,
    Subspace,
    Tolerances,
    block_sparse_projection,
    diagonal_gram_search,
    frame_operator,
    oblique,
    orthogonal_projector,
    parseval_from_frame,
    pffs,
    prescribed_diagonal,
    reconstruct,
    residual_chain,
    structure_report,
    tight_chain,
    tight_pair,
    triangular_projection,
)

__all__ = [
    "Error",
    "ObliqueProjection",
    "Subspace",
    "Tolerances",
    "block_sparse_projection",
    "diagonal_gram_search",
    "frame_operator",
    "oblique",
    "orthogonal_projector",
    "parseval_from_frame",
    "pffs",
    "prescribed_diagonal",
    "reconstruct",
    "residual_chain",
    "structure_report",
    "tight_chain",
    "tight_pair",
    "triangular_projection",
]
