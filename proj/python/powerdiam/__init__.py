from ._core import __version__, diam, express, genset, power_diam, run

__all__ = ["__version__", "diam", "express", "genset", "power_diam", "run"]
