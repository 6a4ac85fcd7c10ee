"""Exact arithmetic for polynomial continued fractions and their unification.

The package represents formulas for mathematical constants as polynomial
linear recurrences, computes their dynamical metrics (irrationality measure,
convergence rate), discovers and rigorously verifies coboundary equivalences
between them, and organizes them as trajectories of conservative matrix
fields.  Everything rests on exact rational arithmetic; floating point
appears only in final limit values and in the heuristic search steps whose
findings are re-proved symbolically.
"""

from .cmf import CMF, check_conserving, pi_cmf, scan_trajectories, trajectory_matrix, trajectory_pcf
from .coboundary import (
    CoboundaryCertificate,
    MatchContext,
    MatchResult,
    match_pair,
    verify_coboundary,
)
from .constants import ConstantRef, constant_value
from .guess import (
    GuessResult,
    RationalSequence,
    eval_series_terms,
    guess_recurrence,
    series_initial_conditions,
)
from .identify import IntegerRelation, MobiusIdentification, identify_mobius, pslq
from .metrics import DeltaEstimate, RateEstimate, convergence_rate, irrationality_delta, rate_ratio
from .multivar import MPoly, MRat
from .pipeline import (
    CoboundaryGraph,
    FormulaRecord,
    GraphNode,
    export_report,
    grow_coboundary_graph,
    ingest_corpus,
    validate_formula,
)
from .poly import Poly
from .ratfunc import RationalFunction, rf_reduce
from .recurrence import (
    PCF,
    ApproxValue,
    CompanionMatrix,
    InitialConditions,
    Recurrence,
    StepMatrix,
    companion,
    convergent,
    evaluate_limit,
    mobius_apply,
    parse_pcf,
    step_product,
)
from .transforms import TransformTrace, fold, index_shift, inflate, to_pcf_canonical

__version__ = "0.1.0"
