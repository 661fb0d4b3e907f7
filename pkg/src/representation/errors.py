"""
Exception hierarchy for the representation-theory core
"""


class RepresentationError(Exception):
    """Base class for every error raised by the computation modules"""


class PartitionError(RepresentationError, ValueError):
    """Malformed partition, partition too long for a rank, or a bad subdiagram"""


class RankValidityError(RepresentationError, ValueError):
    """Family/rank combination rejected, or wrong family for an operation"""


class TheoremHypothesisError(RepresentationError, ValueError):
    """The restriction rule was asked about a partition with more than 2m parts"""


class DegreeOutOfRangeError(RepresentationError, ValueError):
    """Graded degree outside 0..2mk"""


class OracleScaleExceeded(RepresentationError):
    """The brute-force oracle refuses inputs beyond its configured limits"""


class InternalInconsistencyError(RepresentationError, RuntimeError):
    """A self-check failed: negative residual, negative multiplicity, inexact division"""


class SuiteEnvelopeError(RepresentationError, ValueError):
    """A verification suite was asked to run outside its feasibility envelope"""
