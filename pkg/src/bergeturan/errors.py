"""Exception types raised across the toolkit."""


class BergeTuranError(Exception):
    """Base class for all toolkit errors."""


# --- hypergraph / pattern construction ---------------------------------


class ParamsOutOfRange(BergeTuranError):
    """A numeric parameter violates the operation's stated domain."""


class NonUniformEdge(BergeTuranError):
    """An input edge does not have exactly r distinct vertices."""


class VertexOutOfRange(BergeTuranError):
    """A vertex label lies outside 1..n."""


class ParseError(BergeTuranError):
    """Pattern expression is malformed.  Carries the byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class InvalidCycleLength(BergeTuranError):
    """Cycle patterns need at least three edges."""


class FormatError(BergeTuranError):
    """A .hg document violates the format.  Carries the line number."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


# --- containment and certificates --------------------------------------


class IndexOutOfRange(BergeTuranError):
    """A certificate references a vertex or hyperedge that does not exist."""


class EmptyHypergraph(BergeTuranError):
    """Operation needs at least one hyperedge."""


class TooFewEdges(BergeTuranError):
    """Good orders require at least two hyperedges."""


class VertexNotInHost(BergeTuranError):
    """Requested vertex is isolated or absent from the host."""


class V0TooSmall(BergeTuranError):
    """Berge-common neighbourhoods need a base set of at least two vertices."""


class BadParameters(BergeTuranError):
    """Berge-star queries require star size > uniformity >= 2."""


# --- constructions and formulas -----------------------------------------


class DoesNotDivide(BergeTuranError):
    """Block constructions need the block size to divide n."""


class BlockTooSmall(BergeTuranError):
    """Block size below the uniformity leaves no complete blocks."""


class OutsideTheoremRange(BergeTuranError):
    """Formula evaluated outside the parameter range it is stated for."""


class GridOutsideHypotheses(BergeTuranError):
    """A verification grid contains points outside an inequality's hypotheses."""


# --- exhaustive search ----------------------------------------------------


class ScaleGuardExceeded(BergeTuranError):
    """Instance exceeds the configured exhaustive-search scale guard."""


class HostNotFree(BergeTuranError):
    """Operation requires a host already free of the forbidden pattern."""
