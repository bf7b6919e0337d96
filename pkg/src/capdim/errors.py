class PreconditionError(ValueError):
    """An input violates a named precondition of an operation."""

    def __init__(self, name: str, message: str):
        super().__init__(f"{name}: {message}")
        self.name = name


class CapExceeded(PreconditionError):
    """An exact search was refused because the instance exceeds a size cap."""

    def __init__(self, message: str):
        super().__init__("cap", message)
