"""Exact combinatorics, L-factor algebra and distinction verdicts for inner forms of GL(n)."""
from .cuspidal_lines import (CuspidalDatum, Duality, Registry, TwistedCuspidal,
                             chi_distinguished, conjugate_dual, default_registry)
from .distinction import (DistinctionVerdict, Status, discrete_series_distinction, distinguish,
                          proper_ladder_distinguished, standard_module_distinguished,
                          theta_induced_ladders, unitary_distinguished)
from .double_cosets import CosetMatrix, contributing_cosets, enumerate_cosets
from .errors import (DomainError, InternalConsistencyError, ParseError, PreconditionError,
                     RangeError, RegistryError)
from .expr import format_expr, parse_expr
from .ladders import (Classification, FactorKind, Multisegment, UnitaryFactor,
                      classify_multisegment, decompose_unlinked, is_proper_ladder, speh,
                      split_proper, substandard_kernels)
from .laurent import RationalFunction
from .lfactor_algebra import (FactorAtom, FactorProduct, LinearForm, pole_order,
                              telescope_gamma_identity, unramified_asai, unramified_rs)
from .segments import Segment, jacquet_discrete, linked, merge, relate, segment_dual
from .spherical_periods import (PeriodSpec, alpha_factor, intertwining_pole,
                                period_pole_at_minus_sr, spherical_period_closed,
                                spherical_period_recursive)
from .symmetric_words import Permutation, verify_reduction_lemma

__version__ = "0.1.0"
