"""Fraction calculus for rational tangles and the classification of the
knots and links obtained as their closures."""

from .classify import (
    ConnectivityType,
    KnotClassReport,
    achiral_form,
    class_representative,
    classify,
    components,
    connectivity,
    is_achiral,
    is_invertible,
    is_strongly_invertible,
    normalize_odd_denominator,
    oriented_equivalent,
    strong_form,
    strong_u,
    unoriented_equivalent,
)
from .contfrac import (
    ContinuedFraction,
    Fraction,
    FractionParity,
    Parity,
    TangleMatrix,
    evaluate,
    expand,
    matrix,
    palindrome,
    parity,
)
from .errors import (
    InfinityInput,
    InfinityNotExpandable,
    NotCanonical,
    NotTwoComponent,
    ParseError,
    RangeError,
    TangleError,
    ZeroNumerator,
)
from .oracle import (
    CutCompatibility,
    EndPairing,
    ParityMatrix,
    VerificationReport,
    cut_compatibility_rule,
    enumerate_vectors,
    pairing_product,
    pairing_sum,
    parity_matrix,
    sweep_verify,
    trace_components,
    trace_cut_compatibility,
    trace_pairing,
)
from .tangle import (
    TwistReduction,
    add_twist,
    bottom_twist,
    invert,
    mirror,
    reduce_twists,
    rotate,
    special_cut,
)

__version__ = "0.1.0"
