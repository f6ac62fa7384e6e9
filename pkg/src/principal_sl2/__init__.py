"""Principal SL2 restrictions of Lie group characters and torsion classes."""

from .rootdata import CartanType, RootDatum, Weight, WeylElement, build

__all__ = ["CartanType", "RootDatum", "Weight", "WeylElement", "build"]
__version__ = "0.1.0"
