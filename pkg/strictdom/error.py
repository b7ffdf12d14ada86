class Error(Exception):
    pass

# Input errors

class InvalidGame(Error):
    """Raised when a game description has inconsistent shapes, duplicate
    action names or no actions for some player.
    """
    pass

class InvalidNumeral(InvalidGame):
    """Raised when a payoff numeral is malformed, non-finite, a boolean or a
    binary float (which cannot be read back exactly).
    """
    pass

class DimensionMismatch(Error):
    """Raised when points, normals or beliefs that must share a dimension
    do not.
    """
    pass

class DegenerateInput(Error):
    """Raised when a geometric reduction receives input outside the range its
    theorem covers, e.g. too few or duplicate points for a Radon partition.
    """
    pass

class InvalidProgram(Error):
    pass

class InvalidPolytope(Error):
    """Raised when a constraint set is infeasible or unbounded."""
    pass

class NotCovered(Error):
    """Raised when a family of open half-spaces was required to cover a
    polytope but does not. The uncovered point is kept on the exception.
    """
    def __init__(self, message, witness=None):
        super(NotCovered, self).__init__(message)
        self.witness = witness

class InvalidMixture(Error):
    pass

class InvalidCertificate(Error):
    """Raised when a certificate fails exact re-verification."""
    pass

class InvalidSeed(Error):
    pass

# Registry errors

class Unregistered(Error):
    """Raised when the user requests an item from the registry that does
    not actually exist.
    """
    pass

class UnregisteredFixture(Unregistered):
    """Raised when the user requests a game fixture from the registry that
    does not actually exist.
    """
    pass

# Internal errors

class InternalConsistencyError(Error):
    """Raised when a property that is guaranteed by a theorem fails at run
    time, e.g. IESDS and rationalizability disagree. This always points at a
    bug, never at bad input.
    """
    pass
