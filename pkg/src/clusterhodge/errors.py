"""Exception hierarchy.

Everything raised on bad user input derives from InputError so the CLI can
map it to exit code 2 uniformly.  ConsistencyError signals that a computed
result violated a structural invariant (a bug, not bad input).
"""


class ClusterHodgeError(Exception):
    pass


class InputError(ClusterHodgeError):
    pass


class ShapeMismatch(InputError):
    pass


class NotSkewSymmetric(InputError):
    def __init__(self, i: int, j: int, message: str | None = None):
        self.position = (i, j)
        super().__init__(message or f"top block not skew-symmetric at ({i}, {j})")


class IndexOutOfRange(InputError):
    pass


class NotFullRank(InputError):
    pass


class NotReallyFullRank(InputError):
    pass


class NotAcyclic(InputError):
    pass


class NotAnticlique(InputError):
    pass


class NotAForest(InputError):
    pass


class NotAnEdge(InputError):
    pass


class VertexInX(InputError):
    pass


class CycleTooSmall(InputError):
    pass


class ColumnsDependent(InputError):
    pass


class NotPrincipal(InputError):
    pass


class NotConnected(InputError):
    pass


class TooLarge(InputError):
    pass


class ConsistencyError(ClusterHodgeError):
    """A structural invariant failed on a computed value."""
