"""Exception hierarchy shared by the library and the CLI.

Each class carries the process exit code the CLI maps it to, so command
implementations can raise freely and ``cli.main`` stays a thin translator.
"""


class GlsimError(Exception):
    """Base class for all glsim errors."""

    exit_code = 1


class DimensionError(GlsimError):
    """Operands have incompatible or non-square shapes."""

    exit_code = 2


class ValidationError(GlsimError):
    """An input violates a documented precondition."""

    exit_code = 2


class ConfigurationError(GlsimError):
    """Inconsistent CLI flags or config-file contents."""

    exit_code = 2


class DegeneratePostselectionError(GlsimError):
    """All probability has left the postselected subspace."""

    exit_code = 3


class NumericalError(GlsimError):
    """A numerical routine failed to converge or lost all significance."""

    exit_code = 4
