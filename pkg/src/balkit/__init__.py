"""balkit: exact arithmetic and mechanical verification for the balancing family.

The package computes balancing, Lucas-balancing, cobalancing and
Lucas-cobalancing numbers by three independent exact methods, rediscovers
them from their defining Diophantine equations, and verifies a catalog of
identities and congruences over configurable index ranges.
"""

from .identities import EvalResult, IdentityDescriptor, UnknownIdentityError
from .oracle import BalancerWitness
from .quadring import QuadInt
from .sequences import DomainError, SequenceKind, Term, TermSource

__version__ = "0.1.0"

__all__ = [
    "BalancerWitness",
    "DomainError",
    "EvalResult",
    "IdentityDescriptor",
    "QuadInt",
    "SequenceKind",
    "Term",
    "TermSource",
    "UnknownIdentityError",
    "__version__",
]
