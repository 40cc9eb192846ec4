"""Exception taxonomy shared across the package.

The class names double as machine-readable error codes: the CLI prints
``type(exc).__name__`` on stderr and maps the hierarchy onto exit codes,
so renaming a class here is a breaking change.
"""


class ExpdistError(Exception):
    """Base class for all errors raised by this package."""


# --- exact arithmetic -------------------------------------------------------

class DivisionByZero(ExpdistError, ZeroDivisionError):
    """Exact division by a zero rational."""


class DimensionMismatch(ExpdistError):
    """Matrix operands have incompatible shapes."""


class SingularMatrix(ExpdistError):
    """A matrix that must be invertible is singular."""


class SingularForm(SingularMatrix):
    """An aI + bJ form with a = 0 or a + nb = 0 cannot be inverted."""


class SingularLeadingBlock(SingularMatrix):
    """The leading block of a partitioned matrix is singular."""


# --- graph construction and validation --------------------------------------

class GraphError(ExpdistError):
    """Base class for graph construction/validation failures."""


class BadAttachment(GraphError):
    """An attachment references a vertex that does not exist yet."""


class NotConnected(GraphError):
    """The input edge list does not describe a connected graph."""


class MultiEdgeOrLoop(GraphError):
    """The input edge list contains a self-loop or a repeated edge."""


class BlockNotCompleteBipartite(GraphError):
    """A biconnected component is not a complete bipartite graph."""


class BlockNotBipartite(BlockNotCompleteBipartite):
    """A biconnected component contains an odd cycle.

    Subclass of :class:`BlockNotCompleteBipartite`: a block that is not
    even bipartite is in particular not complete bipartite.
    """


# --- parameter guards -------------------------------------------------------

class ZeroQ(ExpdistError):
    """q = 0 is excluded: the matrix q^d is not defined there."""


class SingularParameter(ExpdistError):
    """The requested quantity is undefined at this q (q = ±1 or a
    vanishing block denominator)."""


class VanishingBlockDenominator(SingularParameter):
    """Some block has 1 - q^2 (m-1)(n-1) = 0, so the per-block weights
    are undefined."""


class NotEnoughBlocks(ExpdistError):
    """The operation needs a leaf block, i.e. at least two blocks."""


# --- CLI / file formats -----------------------------------------------------

class InvalidSpec(ExpdistError):
    """A graph spec document is malformed (bad JSON, missing or
    ill-typed fields)."""


class AmbiguousSpec(InvalidSpec):
    """A graph spec supplies both an edge list and a block list."""
