"""Exception hierarchy shared by all modules."""


class RamseyTreesError(Exception):
    """Base class for all library errors."""


class NonEmptyParameters(RamseyTreesError):
    """Word trees only define successors for empty parameter tuples."""


class ForeignCharacter(RamseyTreesError):
    """Character does not belong to the tree's alphabet."""


class RootHasNoDecomposition(RamseyTreesError):
    """Level-0 nodes cannot be decomposed."""


class DepthTooLarge(RamseyTreesError):
    """Requested truncation exceeds the configured node budget."""


class BudgetExceeded(RamseyTreesError):
    """An exhaustive sweep would exceed the configured budget."""


class DomainMismatch(RamseyTreesError):
    """Composition with incompatible domains/ranges."""


class IllegalSplitLevel(RamseyTreesError):
    """Split level outside the legal range."""


class IndexOutOfRange(RamseyTreesError):
    """Duplication index must be below the arity."""


class NotInFamily(RamseyTreesError):
    """Extension function is not a member of the family."""


class NoInsertion(RamseyTreesError):
    """Custom family has no valid insertion result."""


class E1Violated(RamseyTreesError):
    """Successor definedness does not transfer through one-level skips."""


class OracleUndecided(RamseyTreesError):
    """The skip oracle could not decide a level."""


class ArityMismatch(RamseyTreesError):
    """Parameter-word substitution arity error."""


class NotCS(RamseyTreesError):
    """Map is not a Carlson-Simpson monoid member."""


class LengthMismatch(RamseyTreesError):
    """Word tuples must share a common length."""


class LevelMismatch(RamseyTreesError):
    """Nodes are not on the level required by the operation."""


class NotAChain(RamseyTreesError):
    """Input set is not a chain in the tree order."""


class FreeLevelViolation(RamseyTreesError):
    """Free-level precondition of the envelope construction fails."""


class NotIrreducible(RamseyTreesError):
    """Forbidden families must consist of irreducible structures."""


class ForbiddenInPrefix(RamseyTreesError):
    """Supplied structure prefix contains a forbidden substructure."""


class MalformedParameter(RamseyTreesError):
    """Successor parameter tuple is malformed."""


class NoGap(RamseyTreesError):
    """Level removal requires a gap in the level map."""


class BoringConditionViolated(RamseyTreesError):
    """One of the boring-extension preconditions fails; carries a witness."""

    def __init__(self, condition: str, witness=None):
        super().__init__(f"{condition} violated", witness)
        self.condition = condition
        self.witness = witness


class NotI3(RamseyTreesError):
    """Signatures exist only for levels classified interesting by the skip test."""
