"""Weak separation axioms of ideal topological spaces, checked on finite spaces
and on rule-based infinite examples."""

from .core import (
    FiniteSpace,
    Subset,
    closure,
    discrete,
    indiscrete,
    interior,
    khalimsky_window,
    mask,
    members,
    sierpinski,
    space_from_opens,
    space_from_preorder,
    subspace,
)
from .ideals import PrincipalIdeal, cd_ideal, ideal, ideal_from_generators, nwd_ideal, scattered_ideal
from .star import IdealSpace, beta_family, local_function, star_closure, star_topology
from .axioms import AxiomRef, Claim, check_proposition, evaluate, is_T_half, is_T_ideal
from .search import SearchQuery, enumerate_topologies, find_counterexample, verify_diagram, verify_paper
from .pattern import FCSet, PatternSpace, example1_space, example2_space, pattern_axiom_check

__version__ = "0.1.0"
