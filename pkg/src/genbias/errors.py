"""Exception hierarchy shared by all modules.

The CLI maps these to exit codes: ConfigError -> 2, FormatError and OS-level
I/O errors -> 3. Metric-level failures are reported inside the audit report
rather than raised.
"""


class GenbiasError(Exception):
    """Base class for all package-specific errors."""


class FormatError(GenbiasError):
    """Malformed input file: CEMB1, word2vec text, word list, or manifest."""


class ConfigError(GenbiasError):
    """Invalid experiment configuration or CLI usage."""


class DegenerateDataError(GenbiasError):
    """Input carries no usable variance (e.g. a degenerate point cloud)."""
