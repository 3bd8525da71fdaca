"""Polynomial feature exceptions"""
from typing import List, Optional

from discvar.shared.errors import UsageError


class PolyException(Exception):
    """Base exception for polynomial feature"""
    pass


class ContextMismatchError(PolyException, UsageError):
    """Operands live in different variable contexts or orders"""
    def __init__(self, message: str, left: Optional[str] = None, right: Optional[str] = None):
        self.message = message
        self.left = left
        self.right = right
        super().__init__(self.message)


class UnknownVariableError(PolyException, UsageError):
    """A binding or embedding names a variable outside the context"""
    def __init__(self, message: str, variables: Optional[List[str]] = None):
        self.message = message
        self.variables = variables or []
        super().__init__(self.message)


class MissingBindingError(PolyException, UsageError):
    """Numeric evaluation without a value for some variable"""
    def __init__(self, message: str, variables: Optional[List[str]] = None):
        self.message = message
        self.variables = variables or []
        super().__init__(self.message)


class PolyParseError(PolyException, UsageError):
    """Polynomial text or JSON could not be read"""
    def __init__(self, message: str, text: Optional[str] = None):
        self.message = message
        self.text = text
        super().__init__(self.message)
