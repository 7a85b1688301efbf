"""Optimal D-ary prefix codes with codeword lengths confined to [l_min, l_max].

Minimizes any convex quasiarithmetic penalty of the codeword lengths via
coin-collector selection, with an O(n)-space variant, a truncated-Huffman
fast path, a concave k-link-path solver for the linear penalty, and a
fringe-limited sweep on top.
"""

from .core import (
    AbsolutePenalty,
    CustomPenalty,
    ExponentialPenalty,
    LinearPenalty,
    Penalty,
    ProblemSpec,
    QuadraticPenalty,
    classify_bounds,
    dummy_count,
    hard_length_bound,
    kraft_sum,
    pad_dummies,
    penalty_cost,
    problem,
)
from .errors import (
    BoundedCodeError,
    CapacityError,
    InfeasibleError,
    InputError,
    NoSolutionError,
)
from .fringe_search import best_fringe_limited, fringe
from .huffman import bottom_merge_huffman, precheck_lmax, solve_huffman, truncated_huffman
from .linearspace import solve_linear_space
from .monge import solve_linear_fast
from .solver import Codebook, SolveResult, lengths_to_codebook, lengths_to_codewords, solve

__version__ = "0.1.0"

__all__ = [
    "AbsolutePenalty",
    "BoundedCodeError",
    "CapacityError",
    "Codebook",
    "CustomPenalty",
    "ExponentialPenalty",
    "InfeasibleError",
    "InputError",
    "LinearPenalty",
    "NoSolutionError",
    "Penalty",
    "ProblemSpec",
    "QuadraticPenalty",
    "SolveResult",
    "best_fringe_limited",
    "bottom_merge_huffman",
    "classify_bounds",
    "dummy_count",
    "fringe",
    "hard_length_bound",
    "kraft_sum",
    "lengths_to_codebook",
    "lengths_to_codewords",
    "pad_dummies",
    "penalty_cost",
    "precheck_lmax",
    "problem",
    "solve",
    "solve_huffman",
    "solve_linear_fast",
    "solve_linear_space",
    "truncated_huffman",
]
