"""Exact verification of the invariance equation for two-variable Gini means."""

__version__ = "0.1.0"
