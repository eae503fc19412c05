"""Exception hierarchy shared by the analysis modules."""


class AnalysisError(Exception):
    """Base class for all errors raised by lti_opacity."""


class DimensionMismatch(AnalysisError, ValueError):
    pass


class UnsupportedCombination(AnalysisError):
    """Raised when a set-variant pair falls outside the decidable fragment."""


class ChannelRankError(AnalysisError, ValueError):
    """The stacked attack channel [B_t; D_t] does not have full column rank."""


class NotStronglyOpaque(AnalysisError):
    pass


class NoExtension(AnalysisError):
    """No non-secret state can be relabelled while keeping strong opacity."""


class NotASubset(AnalysisError, ValueError):
    pass
