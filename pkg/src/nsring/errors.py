"""Exception hierarchy for nsring."""


class NsringError(ValueError):
    """Base class for all errors raised by this package."""


class EmptyInput(NsringError):
    pass


class GcdNotOne(NsringError):
    pass


class NotAMember(NsringError):
    pass


class SemigroupTooLarge(NsringError):
    """Generator or genus caps exceeded."""


class EmptyGenerators(NsringError):
    pass


class AmbientMismatch(NsringError):
    """Two ideals live over different semigroups."""


class NotNested(NsringError):
    pass


class GorensteinInput(NsringError):
    pass


class GenusGuardExceeded(NsringError):
    pass


class GuardExceeded(NsringError):
    pass


class DvrInput(NsringError):
    pass


class NotThreeGenerated(NsringError):
    pass


class SymmetricInput(NsringError):
    pass
