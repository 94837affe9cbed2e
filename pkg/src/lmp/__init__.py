"""Exact tools for Lebesgue-measure-preserving piecewise-affine maps of the unit interval."""

__version__ = "0.1.0"
