"""Pure braids: combing, the integral Magnus expansion and finite type invariants."""

from .braids import (
    BraidError,
    BraidSyntaxError,
    BraidWord,
    FreeWord,
    IndexRangeError,
    NotInKernelError,
    NotPureError,
    Permutation,
    PureGen,
    Sigma,
    Singular,
    SingularLetterError,
    StrandMismatchError,
    artin_action,
    delete_strand,
    free_reduce,
    is_pure,
    parse_braid,
    permutation_of,
    pure_gen_to_sigma,
)
from .chords import (
    ChordSeries,
    external_product,
    magnus,
    magnus_algebra,
    magnus_free,
    min_degree,
    iter_monomials,
    monomial_basis,
    render_diagram,
    series_mul,
)
from .combing import (
    CombedBraid,
    GroupAlgebraElement,
    algebra_product,
    comb,
    comb_by_action,
    combed_to_braid,
    embed,
    expand_singular,
    kernel_to_free,
)
from .enumeration import (
    DimensionTable,
    binomial_transform_check,
    dim_A,
    lemma53_check,
    make_table,
    mobius,
    phi,
    psi,
    stirling2,
    sur,
    witt_rank,
)
from .invariants import (
    WeightFunctional,
    braids_equal,
    commutator,
    evaluate,
    evaluate_singular,
    magnus_separates,
    n_trivial,
)

__version__ = "0.1.0"
