"""Exact crossed modules of groups, Lie algebras and Hopf algebras.

Everything is computed over the rationals with :class:`fractions.Fraction`;
every axiom is checked on a basis (or on PBW monomials up to a degree bound)
and failures come with a witness.
"""

from .cohomology import (Cochain, ModuleSES, NotClosed, ce_differential, cohomology_dim, connecting_hom,
                         coboundary_shear, differential_matrix, enveloping_skeletal, is_coboundary, splice,
                         splice_report)
from .crossed import (GroupXMod, HopfCoComod, HopfXMod, Lemma1Violation, LieTwoAlg, LieXMod, NotComposable,
                      PreCat1Hopf, TwoGroup, check_crossed_morphism, check_group_xmod, check_hopf_cocomod,
                      check_hopf_xmod, check_lie_two_alg, check_lie_xmod, check_precat1, check_two_group,
                      compose_arrows_group, compose_arrows_linear, liexmod_to_2lie, precat1_from_lie2,
                      twogroup_to_xmod, twolie_to_liexmod, xmod_to_2group)
from .enveloping import (EnvelopingAction, EnvelopingAlgebra, EnvelopingMorphism, UElement, extend_action,
                         pbw_product, primitives_up_to, u_antipode, u_coproduct, verify_enveloping)
from .functors import (FunctorReport, cat1hopf_to_xmod, functor_chi, functor_fun, functor_kg,
                       functor_p, functor_u, grouplike_xmod, lemma4_report, star_action)
from .groups import FinGroup, GroupError, alternating, cyclic, symmetric, trivial_group
from .hopf import (Character, FinDimHopf, HopfElement, HopfError, NotSplit, adjoint_action, adjoint_coaction,
                   char_convolution, characters, dualize, function_algebra, group_algebra, grouplikes, primitives, verify_hopf)
from .lie import (FinLieAlgebra, JacobiError, LieModule, NotADerivation, abelian, heis3, nonabelian2, sl2, solv3,
                  trivial_module)
from .linalg import SparseMat, kernel_basis, membership, rank, solve_linear
from .report import AxiomError, Check, Report

__version__ = "0.1.0"

__all__ = [
    "Cochain", "ModuleSES", "NotClosed", "ce_differential", "cohomology_dim", "connecting_hom",
    "coboundary_shear", "differential_matrix", "enveloping_skeletal", "is_coboundary", "splice",
    "splice_report", "GroupXMod", "HopfCoComod", "HopfXMod", "Lemma1Violation", "LieTwoAlg", "LieXMod",
    "NotComposable", "PreCat1Hopf", "TwoGroup", "check_crossed_morphism", "check_group_xmod",
    "check_hopf_cocomod", "check_hopf_xmod", "check_lie_two_alg", "check_lie_xmod", "check_precat1",
    "check_two_group", "compose_arrows_group", "compose_arrows_linear", "liexmod_to_2lie", "precat1_from_lie2",
    "twogroup_to_xmod", "twolie_to_liexmod", "xmod_to_2group", "EnvelopingAction", "EnvelopingAlgebra",
    "EnvelopingMorphism", "UElement", "extend_action", "pbw_product", "primitives_up_to", "u_antipode",
    "u_coproduct", "verify_enveloping", "FunctorReport", "cat1hopf_to_xmod", "functor_chi", "functor_fun",
    "functor_kg", "functor_p", "functor_u", "grouplike_xmod", "lemma4_report", "star_action", "FinGroup",
    "GroupError", "alternating", "cyclic", "symmetric", "trivial_group", "Character", "FinDimHopf",
    "HopfElement", "HopfError", "NotSplit", "adjoint_action", "adjoint_coaction", "char_convolution",
    "characters", "dualize", "function_algebra", "group_algebra", "grouplikes", "primitives", "verify_hopf",
    "FinLieAlgebra", "JacobiError", "LieModule", "NotADerivation", "abelian", "heis3", "nonabelian2", "sl2",
    "solv3", "trivial_module", "SparseMat", "kernel_basis", "membership", "rank", "solve_linear", "AxiomError",
    "Check", "Report",
    "__version__",
]
