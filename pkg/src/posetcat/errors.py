"""Exception types shared across the package."""


class PosetcatError(Exception):
    pass


class InputError(PosetcatError, ValueError):
    """Malformed input: bad point identifiers, mismatched maps, broken JSON."""


class BudgetExceeded(PosetcatError):
    """A search hit its configured cap. Never interpreted as a negative answer."""

    def __init__(self, what, cap):
        super().__init__(f"{what} exceeded cap of {cap}")
        self.what = what
        self.cap = cap


class NotPathConnected(PosetcatError):
    pass
