"""Elliptic and basic BC_n Bailey machinery with q-series identity checkers."""

__version__ = "0.1.0"
