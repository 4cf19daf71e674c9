"""Verification and enumeration workbench for finite LA-semihypergroups."""

from .core import HyperTable, compose, square, validate
from .enumeration import EnumerationQuery, canonicalize, enumerate_tables, gen_coset, gen_union
from .formats import load_fixture, parse, read_table
from .ideals import IdealKind, enumerate_ideals, is_ideal, minimal_ideals, principal_sets
from .laws import Law, check_law, classify_identities, is_la_semihypergroup
from .regularity import intra_regular, invertibility
from .theorems import TheoremId, check_converse, replay, run_all, run_theorem

__version__ = "0.1.0"
