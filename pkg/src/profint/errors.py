"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input or a violated operation precondition."""


class SignatureError(InputError):
    """Operation outside the ambient signature, e.g. an inverse-limit power
    whose base has a prime of infinite exponent."""


class ResourceError(RuntimeError):
    """A brute-force search exceeded its hard size guard."""
