"""Exact double-shuffle word algebra and high-precision numerics for
multiple zeta values.

The package is organized as a library:

* :mod:`mzv.words`          words, indices, exact linear combinations
* :mod:`mzv.products`       shuffle, stuffle and their star variants
* :mod:`mzv.maps`           the structural linear maps (S, tau, derivations, ...)
* :mod:`mzv.regularization` polynomial-algebra decompositions over h0
* :mod:`mzv.relations`      relation families, exact echelon spans, membership
* :mod:`mzv.catalog`        named identities as runnable verification tasks
* :mod:`mzv.numerics`       high-precision values and closed-form evaluators
* :mod:`mzv.generating`     generating-function coefficient checks
* :mod:`mzv.series`         truncated power series over pluggable rings
* :mod:`mzv.cli`            the ``mzv`` command-line tool
"""

from .words import (
    WordSum,
    dual_word,
    enumerate_indices,
    enumerate_words,
    index_to_word,
    is_admissible,
    weight_depth_height,
    word_to_index,
    zagier_d,
)
from .products import shuffle, star_shuffle, star_stuffle, stuffle
from .maps import (
    ohno_sigma,
    ohno_sigma_bar,
    ohno_sigma_bar_star,
    ohno_sigma_star,
    partial_n,
    partial_n_star,
    s_inv,
    s_map,
    s_tilde,
    s_tilde_inv,
    sigma,
    sigma_inv,
    tau,
)
from .regularization import RegDecomposition, TPolynomial, reg, reg_decompose, rho_apply
from .relations import (
    MembershipCertificate,
    RelationBasis,
    RelationVector,
    build_basis,
    cached_basis,
    gen_family,
    membership,
    quotient_dim,
)
from .catalog import VerificationTask, build as build_identity, catalog_names
from .numerics import PiPower, bernoulli, closed_form, mzv, mzv_star, x0_sum, zeta
from .generating import generating_check

__version__ = "0.1.0"

__all__ = [
    "WordSum", "dual_word", "enumerate_indices", "enumerate_words",
    "index_to_word", "is_admissible", "weight_depth_height", "word_to_index",
    "zagier_d",
    "shuffle", "stuffle", "star_shuffle", "star_stuffle",
    "sigma", "sigma_inv", "s_map", "s_inv", "s_tilde", "s_tilde_inv", "tau",
    "partial_n", "partial_n_star",
    "ohno_sigma", "ohno_sigma_bar", "ohno_sigma_star", "ohno_sigma_bar_star",
    "RegDecomposition", "TPolynomial", "reg", "reg_decompose", "rho_apply",
    "RelationVector", "RelationBasis", "MembershipCertificate",
    "gen_family", "build_basis", "cached_basis", "membership", "quotient_dim",
    "VerificationTask", "build_identity", "catalog_names",
    "PiPower", "bernoulli", "closed_form", "mzv", "mzv_star", "x0_sum", "zeta",
    "generating_check",
]
