"""Groebner feature exceptions"""


class GroebnerException(Exception):
    """Base exception for Groebner feature"""
    pass


class ResourceLimitExceeded(GroebnerException):
    """A basis computation hit a configured limit; carries the partial progress"""
    def __init__(
        self,
        message: str,
        pairs_done: int = 0,
        basis_size: int = 0,
        max_degree: int = 0,
        pairs_pending: int = 0,
    ):
        self.message = message
        self.pairs_done = pairs_done
        self.basis_size = basis_size
        self.max_degree = max_degree
        self.pairs_pending = pairs_pending
        super().__init__(self.message)


class ReductionLimitExceeded(ResourceLimitExceeded):
    """A single reduction ran out of steps or time"""
    def __init__(self, message: str, steps: int = 0):
        self.steps = steps
        super().__init__(message)
