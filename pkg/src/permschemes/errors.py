class InvalidInputError(ValueError):
    """An argument is outside the domain of the operation."""


class ContractError(RuntimeError):
    """A precondition that the caller is responsible for was not met."""


class ResourceError(RuntimeError):
    """A request exceeds a configured size guardrail."""
