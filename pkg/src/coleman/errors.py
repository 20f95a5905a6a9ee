"""Exception types shared across the package."""


class GroupError(Exception):
    """Base class for all errors raised by this package."""


class OrderCapExceeded(GroupError):
    """A construction or search would exceed the configured order cap."""


class InvalidPermutation(GroupError):
    """A generator image list is not a bijection of {0..degree-1}."""


class InvalidSpec(GroupError):
    """A group construction recipe is malformed."""


class InvalidAction(GroupError):
    """A semidirect action is not a homomorphism into the base automorphisms."""


class NotADivisor(GroupError):
    """A prime was requested that does not divide the group order."""


class NotNormal(GroupError):
    """A subgroup required to be normal is not."""


class NotASubgroup(GroupError):
    """A member set is not closed under multiplication and inverse."""


class NotNilpotent(GroupError):
    """A subgroup required to be nilpotent is not."""


class QuotientNotCyclicPrimePower(GroupError):
    """G/N is not cyclic of prime-power order."""


class InvalidTwist(GroupError):
    """A twist element violates the commutator conditions for a phi map."""


class NotAnAutomorphism(GroupError):
    """A constructed map failed the bijective-homomorphism check."""


class SubsetNotClosed(GroupError):
    """A set expected to be a subgroup failed the closure check.

    Carries the witness pair whose product escapes the set.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownTheoremId(GroupError):
    """The verification harness has no checker for the given id."""


class PrimeSearchExhausted(GroupError):
    """No qualifying prime was found below the configured search bound."""
