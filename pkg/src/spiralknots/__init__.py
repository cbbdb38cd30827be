"""Knot invariants from diagrams and sampled curves."""

__version__ = "0.1.0"
