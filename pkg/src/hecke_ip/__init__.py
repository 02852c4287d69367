"""Hecke algebras of simply-laced Coxeter systems with independent parameters."""
from .coxeter import CoxeterDiagram, build_diagram, group_order_by_type
from .errors import DiagramError, GuardExceeded, InvariantError, OutOfScopeError
from .heckealg import dimension, enumerate_basis, prepare
from .repthy import IrrLabel, irr_labels

__version__ = "0.1.0"

__all__ = ["CoxeterDiagram", "DiagramError", "GuardExceeded", "InvariantError", "IrrLabel",
           "OutOfScopeError", "build_diagram", "dimension", "enumerate_basis",
           "group_order_by_type", "irr_labels", "prepare"]
