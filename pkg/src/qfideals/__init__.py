"""Exact arithmetic for split prime ideals of quadratic fields: principality
decisions through binary quadratic forms, explicit generators, and the
class-number-1 classification of imaginary fields with checkable certificates.
"""

__version__ = "0.1.0"

from .classnumber import (
    H1Certificate,
    classify_h1,
    h1_necessary_conditions,
    find_prime_pair_offset,
    nonprincipality_certificate,
    rabinowitsch,
    scan_h1,
    validate_certificate,
)
from .errors import DomainError, InvariantError
from .field import (
    QuadraticField,
    QuadraticInteger,
    in_ideal,
    make_field,
    parse,
    render,
)
from .forms import (
    BinaryForm,
    PellSolution,
    Representation,
    evaluate,
    pell_fundamental,
    represents,
    represents_definite,
    represents_indefinite,
    y_bound,
)
from .intkernel import (
    PrimeSieve,
    crt_q2,
    inv_mod,
    is_prime,
    is_squarefree,
    isqrt,
    legendre,
    primes_up_to,
    sqrt_mod,
)
from .principality import (
    PrincipalityResult,
    SplitPrimeIdeal,
    SplittingType,
    associated_form,
    construct_generator,
    ideal_from_root,
    is_principal,
    split_ideal,
    split_type,
    verify_generator,
)

__all__ = [
    "__version__",
    "BinaryForm",
    "DomainError",
    "H1Certificate",
    "InvariantError",
    "PellSolution",
    "PrimeSieve",
    "PrincipalityResult",
    "QuadraticField",
    "QuadraticInteger",
    "Representation",
    "SplitPrimeIdeal",
    "SplittingType",
    "associated_form",
    "classify_h1",
    "construct_generator",
    "crt_q2",
    "evaluate",
    "find_prime_pair_offset",
    "h1_necessary_conditions",
    "ideal_from_root",
    "in_ideal",
    "inv_mod",
    "is_prime",
    "is_principal",
    "is_squarefree",
    "isqrt",
    "legendre",
    "make_field",
    "nonprincipality_certificate",
    "parse",
    "pell_fundamental",
    "primes_up_to",
    "rabinowitsch",
    "render",
    "represents",
    "represents_definite",
    "represents_indefinite",
    "scan_h1",
    "split_ideal",
    "split_type",
    "sqrt_mod",
    "validate_certificate",
    "verify_generator",
    "y_bound",
]
