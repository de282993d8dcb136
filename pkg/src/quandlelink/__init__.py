"""Quandle coloring counts of virtual links, and linking numbers recovered from them."""
from .gauss import SignedGaussCode, arcs, parse, serialize
from .homcount import ColoringReport, count_oracle, count_propagate
from .linking import (LinkingProfile, recover_abs_linking, virtual_linking_numbers,
                      xn_count_closed_form)
from .quandle import (Quandle, make_dihedral, make_trivial, make_xn, orbits,
                      verify_quandle)
from .wirtinger import presentation

__version__ = "0.1.0"

__all__ = [
    "ColoringReport", "LinkingProfile", "Quandle", "SignedGaussCode", "arcs", "count_oracle",
    "count_propagate", "make_dihedral", "make_trivial", "make_xn", "orbits", "parse",
    "presentation", "recover_abs_linking", "serialize", "verify_quandle",
    "virtual_linking_numbers", "xn_count_closed_form",
]
