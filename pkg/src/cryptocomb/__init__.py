"""Cryptological combinatorics workbench.

Four families of exact computation, one package:

* braid words, their closures, and Jones polynomials (``braids``,
  ``jones``), with connected-sum composition and obfuscation
  (``compose``) feeding a knot-based key agreement protocol and its
  eavesdropper attack (``protocol``);
* exact Bayesian succession probabilities for urn draws
  (``succession``);
* the push game on simplex boards, solved over Z_m by Smith normal form
  (``pushgame``);
* graph information entropy and information flow (``entropy``).

``cli`` wires everything into one executable; ``server`` exposes boards
over HTTP for the browser client.
"""
from .braids import (
    BraidWord,
    Permutation,
    apply_relation,
    closure_components,
    concat,
    exponent_sum,
    invert,
    is_knot,
    markov_conjugate,
    markov_destabilize,
    markov_stabilize,
    permutation,
    random_braid,
    random_knot_braid,
)
from .compose import compose, obfuscate
from .entropy import EntropyReport, SimpleGraph, entropy_report, info_flow, psi_values
from .errors import CryptocombError
from .jones import (
    DEFAULT_STRAND_CAP,
    JonesResult,
    PolyMatrix,
    derive_key,
    jones_polynomial,
    kernel_backend,
    rep_apply,
)
from .laurent import LaurentPoly
from .protocol import (
    EveResult,
    ProtocolMessage,
    SessionOutcome,
    eve_attack,
    run_multi_party,
    run_two_party,
)
from .pushgame import (
    Colorable,
    SimplexBoard,
    class_count,
    count_solutions,
    decide_colorable,
    enumerate_solutions,
    exact_count,
    hexagonal_board,
    invariant_vector,
    proper_coloring,
    push,
    region_connected,
    smith_normal_form,
    solvable_by_invariant,
    solve,
    triangular_board,
)
from .succession import (
    Prior,
    Replacement,
    UrnModel,
    bernoulli_form,
    joint_norep,
    limit_succession,
    posterior,
    power_sum,
    simulate_urn,
    succ_binom_rep,
    succ_norep,
    succ_uniform_rep,
)

__version__ = "0.1.0"
