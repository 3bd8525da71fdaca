"""Polynomial feature constants"""


class TermOrderKind:
    """Supported monomial orders"""

    GREVLEX = "grevlex"
    LEX = "lex"
    BLOCK = "block"


class ArithOp:
    """Binary ring operations exposed by poly_arith"""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"


SUPPORTED_ORDERS = [TermOrderKind.GREVLEX, TermOrderKind.LEX, TermOrderKind.BLOCK]
