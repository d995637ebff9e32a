"""
Outcome solver and misere Red-Blue classifier
"""

from .search import (
    PlayConvention,
    OutcomeClass,
    SearchStats,
    SearchSession,
    SolveReport,
    combine_outcome,
    winner,
    outcome,
    optimal_moves,
    solve
)
from .classifier import classify_misere_rb, statement_orientation, proof_strategy_move

__all__ = [
    'PlayConvention',
    'OutcomeClass',
    'SearchStats',
    'SearchSession',
    'SolveReport',
    'combine_outcome',
    'winner',
    'outcome',
    'optimal_moves',
    'solve',
    'classify_misere_rb',
    'statement_orientation',
    'proof_strategy_move'
]
