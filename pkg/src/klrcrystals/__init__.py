"""Crystals, adapted strings, two-letter module decompositions, shuffle
characters, and exact matrix models with full defining-relation checks for
finite classical types.
"""

from .cartan import (
    CartanDatum,
    ReducedWord,
    build_cartan,
    coroot_pairing,
    longest_word,
    positive_roots,
    verify_reduced_longest,
)
from .characters import (
    Character,
    ch_delta,
    character,
    coefficient,
    decomposition_character,
    serre_check,
    shuffle,
)
from .crystals import (
    CrystalGraph,
    Element,
    component_highest,
    generate_crystal,
    spin_crystal,
    stats,
    tensor_apply,
    to_dot,
    vector_crystal,
    weight,
)
from .decomposition import (
    Decomposition,
    DeltaFactor,
    counts_to_t,
    decompose,
    delta_factors,
    delta_indicator,
    hat,
    kashiwara_word,
    reconstruct,
    theta,
)
from .klr import (
    MatrixModule,
    QPolynomial,
    build_delta_module,
    build_q,
    check_degrees,
    check_relations,
    module_qcharacter,
    qcharacter_at_one,
    random_choices,
)
from .strings import (
    AdaptedString,
    Triangle,
    adapted_string,
    enumerate_S_lambda,
    in_S,
    in_S_lambda,
    make_string,
    string_to_element,
    triangle,
)
from .verification import (
    TestReport,
    replay_example_b3,
    run_bijection_suite,
    run_full_suite,
    weyl_dimension,
)

__version__ = "1.0.0"
