"""Exact arithmetic in the pro-p Iwahori Hecke algebra of SL2(Q_p) in characteristic p."""
from .field import FieldElem, FieldSpec, make_field
from .hecke import HElem, Word, e_elem, iota, jmap, tau, tau_omega
from .centre import ZElem, h_to_z, x_elem, z_to_h, zeta_elem
from .bimodule import BElem, Kappa2, default_kappa2
from .quotient import GluingGraph, build_quotient_graph, rprime_component
from .expr import eval_expr, format_helem, parse_expr
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "FieldElem", "FieldSpec", "make_field",
    "HElem", "Word", "e_elem", "iota", "jmap", "tau", "tau_omega",
    "ZElem", "h_to_z", "x_elem", "z_to_h", "zeta_elem",
    "BElem", "Kappa2", "default_kappa2",
    "GluingGraph", "build_quotient_graph", "rprime_component",
    "eval_expr", "format_helem", "parse_expr",
    "run_suite",
]
