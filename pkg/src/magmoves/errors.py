"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller passed arguments that violate an operation's contract."""


class ParseError(InputError):
    """A serialized graph could not be decoded."""


class PreconditionError(InputError):
    """An operation was called on a graph outside its stated domain."""


class NotAMagError(InputError):
    """A graph failed MAG validation; the message names a witness."""


class MoveRejectedError(InputError):
    """A requested edge replacement fails its licensing predicate."""
