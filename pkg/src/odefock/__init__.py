"""Exact arithmetic for truncated Fock spaces, their semi-infinite wedge
models, vertex-type operators, and the solution theory of the generic
linear ODE, together with the untruncated exponential limit."""

from .errors import (DomainError, InsufficientIndexBound, LengthExceedsOrder,
                     NotInKernel, NotWeaklyDecreasing, TruncationExhausted,
                     TruncationMismatch, WrongCharge)
from .partitions import (Partition, add_vertical_strip, make_partition,
                         partitions_up_to, remove_vertical_strip)
from .rings import Laurent, determinant
from .boson import (BilateralSeq, EPoly, SchurVector, elementary_partial,
                    epoly_to_schur, h_of_e, h_sequence, jacobi_trudi, mult,
                    pieri, schur_to_epoly, x_of_e)
from .series import (TSeries, apply_odo, cauchy_decompose, derive,
                     is_in_kernel, series_from_obj, series_to_obj,
                     t_power_in_u_basis, u_form, u_gen)
from .wedge import (WedgeMonomial, WedgeVector, check_exp_insertion,
                    check_partial_sum_expansion, contract, e_action,
                    sigma_boson, solution_wedge_det, solution_wedge_sigma,
                    straighten_indices, wedge_insert, x_contract, x_wedge)
from .vertex import (LaurentBoson, check_inverse, check_multiplicative,
                     check_row_transform_det, g_strip, g_twisted, g_vee,
                     gamma, gamma_fermionic, gamma_vee, gamma_vee_det,
                     gamma_vee_fermionic, h_schur)
from .infinity import (HPoly, accum_vs_exp, check_ring_hom, exp_vertex,
                       exp_vertex_laurent, free_schur, h_free, kp_residual,
                       schur_vs_exp, u_series_free, x_derive)
from .verify import SUITE_NAMES, run_suite

__version__ = "0.1.0"
