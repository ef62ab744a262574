"""Exception types shared across the library.

Validators raise; check-style functions return reports instead.
"""

from __future__ import annotations


class WbkError(Exception):
    pass


class ValidationError(WbkError):
    """An axiom failed.

    `law` names the violated axiom (snake_case), `witness` is the
    lexicographically smallest offending tuple, `side` is "add" or "mul"
    for two-operation structures.
    """

    def __init__(self, law: str, witness: tuple | None = None, side: str | None = None):
        self.law = law
        self.witness = witness
        self.side = side
        parts = [law]
        if side is not None:
            parts.append(f"side={side}")
        if witness is not None:
            parts.append(f"witness={witness}")
        super().__init__(" ".join(parts))


class NotAnIdeal(ValidationError):
    """A subset handed to an ideal-requiring operation is not an ideal."""

    def __init__(self, law: str, witness: tuple | None = None):
        super().__init__(law, witness)


class NotAHom(ValidationError):
    """A map handed to a hom-requiring operation is not a homomorphism."""

    def __init__(self, witness: tuple | None = None, side: str | None = None):
        super().__init__("not_a_hom", witness, side)


class NotAnnihilatorSeries(ValidationError):
    """A proposed chain fails the annihilator-series condition at `position`."""

    def __init__(self, position: int, witness: tuple | None = None):
        self.position = position
        super().__init__("not_annihilator_series", witness)
        self.args = (f"position={position} witness={witness}",)


class NoPeriod(WbkError):
    """Power iteration of a solution never returns to the first power."""

    def __init__(self, tail: int, cycle: int):
        self.tail = tail
        self.cycle = cycle
        super().__init__(f"no period: powers enter a cycle of length {cycle} after {tail} steps")


class OrderTooLarge(WbkError):
    pass


class InternalInvariantBroken(WbkError):
    """A theorem-backed cross-check failed; this signals a bug, not bad input."""


class ParseError(WbkError):
    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(message if location is None else f"{message} at {location}")


class UnknownName(WbkError):
    pass


class UsageError(WbkError):
    pass
