"""Exception types shared across the package."""


class OrdlabError(Exception):
    """Base class for ordlab errors."""


class MalformedInputError(OrdlabError):
    """Bad user-supplied data: labels, cover lists, files, filter bases."""


class LimitExceededError(OrdlabError):
    """A resource guard tripped (carrier size, map count, subset count)."""
