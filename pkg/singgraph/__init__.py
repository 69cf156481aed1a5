"""singgraph: deformation invariants of rational surface singularities from dual graphs."""

__version__ = "0.1.0"
