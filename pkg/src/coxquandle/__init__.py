"""Coxeter groups, Coxeter quandles, root racks and the adjoint group as a central extension."""
from .adjoint import AdElement, AdjointModel, coboundary_solve, cocycle_table, tau_table
from .config import Limits
from .engine import CoxeterGroup, GroupElement, GroupTable
from .errors import (EnumerationCapExceeded, GraphSyntaxError, NotSingleClass, ParityError,
                     RootCapExceeded, ValidationError, WordProblemBudgetExceeded)
from .graph import INF, CoxeterMatrix, OddComponents, catalog, odd_components, parse_graph
from .quandle import QuandleTable, Reflection, conjugacy_classes, reflections, w_abelianization
from .rootsys import RootSystem, build_root_system, reflect

__version__ = "0.1.0"
