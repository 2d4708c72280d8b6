"""Pro-p Iwahori Hecke rings, the star basis modulo q, and mod-p Satake images."""

from .affine_weyl import AffElt, AffineWeyl, affine_weyl
from .hecke import HeckeAlgebra, HeckeElement, Orientation, hecke_algebra
from .rootdata import BasedRootDatum, load_datum, nu_to_v, preset, v_to_nu
from .satake import BimoduleElement, NotInImage, SatakeModel, SphericalElement, WeightParam
from .star import LiftedWord, StarCalculus, c_of_seq, c_wx, subword_extract
from .suites import Bounds, SuiteReport, emit_table, run_suite
from .torus import ProPElement, TorusCharacter, TorusCover, torus_cover

__version__ = "0.1.0"

__all__ = [
    "AffElt", "AffineWeyl", "affine_weyl",
    "HeckeAlgebra", "HeckeElement", "Orientation", "hecke_algebra",
    "BasedRootDatum", "load_datum", "nu_to_v", "preset", "v_to_nu",
    "BimoduleElement", "NotInImage", "SatakeModel", "SphericalElement", "WeightParam",
    "LiftedWord", "StarCalculus", "c_of_seq", "c_wx", "subword_extract",
    "Bounds", "SuiteReport", "emit_table", "run_suite",
    "ProPElement", "TorusCharacter", "TorusCover", "torus_cover",
]
