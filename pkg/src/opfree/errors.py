"""Error types shared by all modules.

Every domain error carries a machine-readable ``code`` plus a payload dict,
so the CLI can emit one parsable ``error:{...}`` line and tests can assert
on positions / witnesses instead of message strings.
"""

from __future__ import annotations


class OpfreeError(Exception):
    """Base class for all domain errors."""

    code = "ERROR"

    def __init__(self, message: str, **payload):
        super().__init__(message)
        self.payload = payload

    def as_dict(self) -> dict:
        d = {"code": self.code}
        d.update(self.payload)
        return d


class ParseError(OpfreeError):
    code = "PARSE_ERROR"

    def __init__(self, position: int, expected: str):
        super().__init__(
            f"parse error at {position}: expected {expected}",
            position=position,
            expected=expected,
        )


class UnbalancedBrackets(OpfreeError):
    code = "UNBALANCED_BRACKETS"

    def __init__(self, position: int):
        super().__init__(f"unbalanced bracket opened at {position}", position=position)


class NegativePrefix(OpfreeError):
    code = "NEGATIVE_PREFIX"

    def __init__(self, index: int):
        super().__init__(f"path dips below the axis at step {index}", index=index)


class Unbalanced(OpfreeError):
    code = "UNBALANCED"

    def __init__(self, excess: int):
        super().__init__(f"path ends at height {excess}", excess=excess)


class DecorationMismatch(OpfreeError):
    code = "DECORATION_MISMATCH"

    def __init__(self, open_index: int, close_index: int):
        super().__init__(
            f"matched pair at ({open_index}, {close_index}) carries different decorations",
            open_index=open_index,
            close_index=close_index,
        )


class NotAnOpen(OpfreeError):
    code = "NOT_AN_OPEN"

    def __init__(self, index: int):
        super().__init__(f"symbol at {index} is not an opening bracket", index=index)


class NotInFamily(OpfreeError):
    """Input fails the subfamily predicate required by an operation."""

    code = "NOT_IN_FAMILY"

    def __init__(self, predicate: str, witness=None):
        super().__init__(
            f"input is not {predicate}" + (f" (witness: {witness})" if witness is not None else ""),
            predicate=predicate,
            witness=witness,
        )


class FamilyMismatch(OpfreeError):
    code = "FAMILY_MISMATCH"

    def __init__(self, expected: str, got: str):
        super().__init__(f"expected family {expected}, got {got}", expected=expected, got=got)


class MixedCoefficientTags(OpfreeError):
    code = "MIXED_COEFFICIENT_TAGS"

    def __init__(self):
        super().__init__("cannot mix rational and lambda-polynomial coefficients")


class UnknownSymbol(OpfreeError):
    code = "UNKNOWN_SYMBOL"

    def __init__(self, name: str):
        super().__init__(f"no value assigned to letter {name!r}", name=name)


class SizeLimitExceeded(OpfreeError):
    code = "SIZE_LIMIT_EXCEEDED"

    def __init__(self, size: int, limit: int):
        super().__init__(f"size {size} exceeds the enumeration cap {limit}", size=size, limit=limit)


class NoRoute(OpfreeError):
    code = "NO_ROUTE"

    def __init__(self, source: str, target: str):
        super().__init__(f"no conversion route from {source} to {target}", source=source, target=target)


class UnitInNonunitary(OpfreeError):
    code = "UNIT_IN_NONUNITARY"

    def __init__(self):
        super().__init__("the empty forest has no place in a nonunitary family")
