"""The take-away game Gamma_k whose P-positions are the Beatty pairs of
alpha_k = [1;k,1,k,...] and beta_k = [k+1;1,k,1,k,...].

Modules: :mod:`.beatty` (exact sequences), :mod:`.ruleset` (moves),
:mod:`.solver` (backward induction, winning moves), :mod:`.sturmian`
(the word W and its constructions), :mod:`.synth` (greedy move mining) and
:mod:`.cli`.
"""

from .beatty import BeattyTables, TableRangeError, beatty_a, beatty_b, build_tables, isqrt, s_set
from .core import GameParams, Position
from .ruleset import (
    ExtraMoveTable,
    MoveSpec,
    MoveType,
    closed_form_k2,
    closed_form_k2_move,
    extra_pairs,
    is_move_in_gamma,
    legal_moves,
)
from .solver import (
    CheckResult,
    PNGrid,
    WinningMove,
    WinningMoveOracle,
    check_no_p_to_p,
    index_of_pposition,
    solve_grid,
    verify_theorem1,
    winning_move,
)
from .synth import compare_with_typeiii, greedy_synthesize

__version__ = "0.1.0"
