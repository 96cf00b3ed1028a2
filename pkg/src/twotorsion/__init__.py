"""Exact arithmetic for abelian surfaces and varieties bad at one prime:
prime classification by quadratic-form representations, class-group
2-parts, F2 dihedral modules, and genus-2 curve families with Richelot
transforms."""

from .classgroup import (
    FeasibilityReport,
    FormClassGroup,
    H2Cache,
    QuadForm,
    class_number,
    compose,
    enumerate_reduced,
    form_class_group,
    h2,
    max_feasible_g,
    rm_feasibility,
)
from .curves import (
    FamilyInstance,
    Genus2Model,
    RichelotPair,
    assemble_model,
    curve_1797,
    delta_of_stated_partner,
    family_ab1,
    family_ex2,
    family_mild,
    mild_check_family,
    mild_reduction_check,
    richelot,
    richelot_of_model,
    search_prime_pairs,
    stated_partner,
    stated_partner_1797,
    verify_richelot_1797,
    verify_richelot_partner,
)
from .gaussian import GaussInt
from .invariants import IgusaClebsch, igusa_clebsch, same_curve_over_closure
from .modules import (
    AdmissibleModule,
    LambdaModule,
    PhiBlocModule,
    build_lambda,
    build_phi_d,
    build_xi,
    decompose_phi_blocs,
    has_mu2_sub,
    is_balanced,
    phi_bloc_obstruction,
    t_power,
)
from .polynomials import GaussPoly, IntPoly, conj_product, discriminant, resultant
from .primes import (
    OmegaReport,
    PrimeClass,
    PrimeProfile,
    classify,
    core,
    cornacchia,
    in_p1_star,
    is_prime,
    omega_bound_check,
)
from .reduction import MildOutcome

__version__ = "0.1.0"
