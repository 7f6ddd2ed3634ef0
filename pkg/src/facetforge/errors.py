"""Exception hierarchy shared across the package."""


class FacetForgeError(Exception):
    """Base class for all errors raised by this package."""


class ConlluParseError(FacetForgeError):
    """Malformed CoNLL-U input; message carries the offending line number."""


class TokenSpanError(FacetForgeError):
    """A token surface could not be located in its sentence text."""


class EmbeddingError(FacetForgeError):
    """Vector file is malformed or empty."""


class NotFoundError(FacetForgeError):
    """Lookup for a concept or assertion that is not in the store."""


class DumpError(FacetForgeError):
    """A knowledge-base dump line violates the documented schema."""


class RequestError(FacetForgeError):
    """A QA request violates its invariants (bad mask, missing prefix, ...)."""


class ModelEndpointError(FacetForgeError):
    """The external model endpoint failed or returned a malformed payload."""
