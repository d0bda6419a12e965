"""Figure rendering for mirroratom CSV outputs: ratio curves and 3-D angular
emission surfaces.  A pure consumer of the CLI's CSV schemas; byte-identical
input files render to byte-identical images."""

from .io import AngularTable, RatioTable, SchemaError, read_angular_csv, read_ratio_csv
from .render import plot_angular_surfaces, plot_ratios

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "SchemaError", "RatioTable", "AngularTable",
    "read_ratio_csv", "read_angular_csv",
    "plot_ratios", "plot_angular_surfaces",
]
