"""Shared exception markers"""


class UsageError(Exception):
    """Marker for invalid arguments; the CLI exits with code 2 on these"""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)
