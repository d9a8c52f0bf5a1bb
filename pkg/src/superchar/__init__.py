"""Projective indecomposable modules of classical supergroups as Euler-characteristic combinations."""

__version__ = "0.1.0"
