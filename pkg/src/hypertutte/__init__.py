"""Tutte-type invariants of hypergraphs: hypertrees, interior and exterior
polynomials, polymatroids, planar duals and trinities."""

from .core import (BipartiteGraph, Hypergraph, MonomialSet, UniPolynomial, abstract_dual, bip,
                   classical_tutte_slices, induced_hypergraphs, nullity, spanning_trees)
from .hypertree import enumerate_hypertrees, is_hypertree, realize
from .invariants import exterior_polynomial, interior_polynomial
from .lattice import LatticePointSet, SetFunctionTable, base_points
from .planar import RotationSystem, planar_dual_hypergraph
from .trinity import Trinity, berman_determinant, enhanced_determinant

__version__ = "0.1.0"
