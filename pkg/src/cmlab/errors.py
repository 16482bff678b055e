"""Exception types shared across the package."""


class CmlabError(Exception):
    """Base class for all errors raised by cmlab."""


class ResourceLimitError(CmlabError):
    """A configured computation cap (pairs, degree, rank) was exceeded."""


class ZeroModuleError(CmlabError, ValueError):
    """An invariant that is undefined for the zero module was requested."""


class NotFiniteLengthError(CmlabError, ValueError):
    """A finite-length module was required."""


class NotCohenMacaulayError(CmlabError, ValueError):
    pass


class SamplingError(CmlabError):
    """Random sampling of linear forms exhausted its retry budget."""


class InadmissibleError(CmlabError, ValueError):
    """A theorem check was invoked with an index outside its admissible range."""
