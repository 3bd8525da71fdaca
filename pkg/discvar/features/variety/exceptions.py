"""Variety feature exceptions"""
from typing import Optional

from discvar.shared.errors import UsageError


class VarietyException(Exception):
    """Base exception for variety feature"""
    pass


class EigenvalueError(VarietyException, UsageError):
    """Eigenvalues unsuitable for the requested construction"""
    def __init__(self, message: str, eigenvalues: Optional[str] = None):
        self.message = message
        self.eigenvalues = eigenvalues
        super().__init__(self.message)


class EllipseShapeError(VarietyException):
    """System has no single quadric of the form a*u^2 + (w - c)^2 = r^2"""
    def __init__(self, message: str, members: int = 0):
        self.message = message
        self.members = members
        super().__init__(self.message)
