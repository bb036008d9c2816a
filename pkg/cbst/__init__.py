from .batch import (
    batch_engine,
    boundary_params,
    crossover_lambda,
    depth_index,
    depth_margin,
    theta_boundary,
)
from .cgsm import cgsm_sorter
from .chain import Chain, ChainNode
from .dynamics import choose_alternate, delete, insert
from .ordinal import flex_step, rank, rank_of, select, select_path
from .pyramid import build_from_sorted, no_foul_check, plan_skeleton, pyramid_builder
from .tree import Cbst, NodeRef

__all__ = [
    "Cbst",
    "Chain",
    "ChainNode",
    "NodeRef",
    "batch_engine",
    "boundary_params",
    "build_from_sorted",
    "cgsm_sorter",
    "choose_alternate",
    "crossover_lambda",
    "delete",
    "depth_index",
    "depth_margin",
    "flex_step",
    "insert",
    "no_foul_check",
    "plan_skeleton",
    "pyramid_builder",
    "rank",
    "rank_of",
    "select",
    "select_path",
    "theta_boundary",
]
