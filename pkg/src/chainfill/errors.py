"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad labels, shapes, flags, files)."""


class NonComplexError(Exception):
    """A boundary composite is nonzero; carries the offending degree and entry."""

    def __init__(self, degree, witness):
        self.degree = degree
        self.witness = witness  # (row_label, col_label, value)
        row, col, value = witness
        super().__init__(
            f"composite boundary out of degree {degree} is nonzero at "
            f"({row}, {col}) = {value}"
        )


class NotACycleError(Exception):
    """A chain handed to a cycle-only operation has nonzero boundary."""

    def __init__(self, degree, witness):
        self.degree = degree
        self.witness = witness  # (label, value)
        label, value = witness
        super().__init__(f"chain in degree {degree} is not a cycle: "
                         f"boundary has {label} -> {value}")


class InternalInvariantError(RuntimeError):
    """An exact identity the solver guarantees failed; always a bug."""
