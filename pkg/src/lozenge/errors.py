"""Domain errors raised by the lozenge package."""


class LozengeError(Exception):
    """Base class for all domain errors; the CLI maps these to exit status 1."""


class SingularMatrix(LozengeError):
    """A periodicity matrix has determinant zero."""


class InfiniteIndex(LozengeError):
    """A relation system cuts out a sublattice of infinite index."""


class ParseError(LozengeError):
    """A generator or matrix string does not match the grammar."""


class DeterminantNotOne(LozengeError):
    """A diagonal generator's exponents do not sum to zero mod its order."""


class NotFaithful(LozengeError):
    """The first two characters fail to generate the dual group."""


class InvalidTiling(LozengeError):
    """A letter assignment violates the compatibility axiom."""


class InvalidType(LozengeError):
    """A letter-count triple fails the divisibility condition or sum rule."""


class BadExponentSum(LozengeError):
    """An exponent triple is negative somewhere or does not sum to the order."""


class NotInLattice(LozengeError):
    """A point expected inside the periodicity lattice lies outside it."""


class NotFlippable(LozengeError):
    """The requested coset is neither a source nor a sink."""


class InvalidCut(LozengeError):
    """An arrow set does not remove exactly one arrow per unit triangle."""


class TypeMismatch(LozengeError):
    """Two tilings do not share a quotient and letter-count type."""


class NonPositiveType(LozengeError):
    """An operation requiring all three letters got a boundary type."""


class BoundExceeded(LozengeError):
    """A brute-force enumeration was asked to exceed its size bound."""


class SchemaError(LozengeError):
    """A tiling file is malformed (JSON shape, keys, or letter values)."""
