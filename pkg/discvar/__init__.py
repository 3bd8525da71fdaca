"""Minimal-degree equations and orbit geometry of the discriminant surface of symmetric matrices"""

__version__ = "1.0.0"
