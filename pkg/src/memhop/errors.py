"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Shapes or lengths of inputs do not line up."""


class ConfigError(ValueError):
    """Bad run configuration: unknown key, missing value, invalid combination."""


class ParseError(ValueError):
    """Malformed dataset file; message carries the offending line number."""


class VocabularyError(ValueError):
    """Word or label cannot be resolved against a vocabulary."""


class NonFiniteGradientError(RuntimeError):
    """A gradient tensor contained NaN or Inf; the update was aborted."""
