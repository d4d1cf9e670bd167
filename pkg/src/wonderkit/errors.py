"""Exception types shared across wonderkit."""

import os

DEFAULT_CAP = 10**7


class WonderkitError(ValueError):
    """Base class for rejected inputs."""


class CapExceeded(WonderkitError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, what, estimate, cap):
        self.what = what
        self.estimate = estimate
        self.cap = cap
        super().__init__(f"{what}: size {estimate} exceeds cap {cap}")


class ConventionError(WonderkitError):
    """An element violates a coset / double-coset membership precondition."""


def default_cap():
    env = os.environ.get("WONDERKIT_CAP")
    if env:
        return int(env)
    return DEFAULT_CAP
