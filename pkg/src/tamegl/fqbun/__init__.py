"""Finite-field model of parabolic PGL(2)-bundles on P^1 with three marked points."""
from .birkhoff import (Birkhoff, NotABundle, TransitionMatrix, WindowExceeded, birkhoff,
                       sections, splitting_pair, splitting_type)
from .field import SUPPORTED_Q, FqConfig, LPoly, UnsupportedField
from .hecke import (NotUnramified, ParabolicBundle, atkin_lehner, hecke_fiber_counts,
                    lower_modification, normalize, unramified_points)
from .moduli import (GENERIC, S, AutElement, Census, InvalidLabel, OrbitLabel,
                     ParabolicPoint, all_points, aut_bundle_order, aut_elements,
                     aut_generators, aut_order, classify, groupoid_mass, labels,
                     orbit_census, orbits_by_action, representative, stabilizer_order,
                     closure, orbit_dimension, specializations)

__all__ = [
    "Birkhoff", "NotABundle", "TransitionMatrix", "WindowExceeded", "birkhoff", "sections",
    "splitting_pair", "splitting_type", "SUPPORTED_Q", "FqConfig", "LPoly", "UnsupportedField",
    "NotUnramified", "ParabolicBundle", "atkin_lehner", "hecke_fiber_counts",
    "lower_modification", "normalize", "unramified_points", "GENERIC", "S", "AutElement",
    "Census", "InvalidLabel", "OrbitLabel", "ParabolicPoint", "all_points",
    "aut_bundle_order", "aut_elements", "aut_generators", "aut_order", "classify",
    "groupoid_mass", "labels", "orbit_census", "orbits_by_action", "representative",
    "stabilizer_order", "closure", "orbit_dimension", "specializations",
]
