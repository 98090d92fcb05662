"""Exception types shared across modules."""


class CapError(RuntimeError):
    """A configured size cap was exceeded; raise the cap or shrink the input."""


class DegreeCapError(CapError):
    """A field degree is above the configured degree cap."""
