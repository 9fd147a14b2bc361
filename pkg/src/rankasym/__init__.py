"""rankasym: exact partition rank statistics, the mock modular special
functions behind them, and a numerical reconstruction of the rank counts
N(m, n) through Wright's circle method, verifying the asymptotic

    N(m, n) ~ (beta/4) sech^2(beta m / 2) p(n),   beta = pi / sqrt(6 n).
"""

from .errors import (CapExceededError, DomainError, PrecisionError,
                     QuadratureError, SingularArgumentError)
from .exact import (ENUMERATION_CAP, SERIES_CAP, CrankTable, RankTable,
                    StatTable, crank_of, crank_table, dyson_class_sizes,
                    enumerate_partitions, partition_count,
                    partition_counts_up_to, rank_counts_series, rank_of,
                    rank_table)
from .qseries import (BivariateSeries, LaurentPoly, euler_product_prefix,
                      pentagonal_series, rank_generating_expansion)
from .quadrature import (DEFAULT_CONFIG, QuadratureConfig, adaptive_gl,
                         composite_gl, gaussian_tail_halfwidth, pv_adaptive_gl)
from .specfun import (appell_A1, appell_mu, dedekind_eta, euler_integral,
                      euler_number_at_zero, euler_odd_at_zero,
                      euler_product_value, jacobi_theta, lattice_distance,
                      mordell_h, q_from_tau, sech_expansion_residual)
from .asym import (RmEstimate, R_m_eval, R_m_log_near_pole, SParam,
                   G1_euler_series, G_split, I_split, far_field_bound,
                   far_field_bound_check, g_m_eval, g_m_main_term,
                   partition_P_bound_check, partition_gen_prefactor,
                   rank_R_direct, rank_decomposition_residual,
                   rank_decomposition_rhs)
from .circle import (ContourResult, ConvergenceRow, contour_rank_count,
                     convergence_study, main_term)

__version__ = "1.0.0"
