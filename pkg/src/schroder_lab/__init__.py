"""Exact enumeration of r-Schroder paths, their statistics, parking functions,
and brute-force checks of the counting formulas built on them."""
from .counting import (NonIntegralCount, count_fuss_catalan, count_parking_closed,
                       count_schroder, gen_poly, parking_closed_exact)
from .lattice import (AreaCode, InvalidCode, LatticePath, Mode, PathSpec, RegionHexagon,
                      RegionPentagon, count_paths, decode, encode, enumerate_paths,
                      enumerate_region_paths, format_code, parse_code, validate_code)
from .parking import (Factorization, ParkingFunction, brute_count_parking, is_parking,
                      parking_set, parking_set_size)
from .qpoly import QPoly, QTPoly, pochhammer, q_binom, q_fact, q_int, specialize_t_inv_q
from .recursions import (BetaIndexMode, DegenerateMode, DomainError, VariantConfig, E, F, G, H,
                         brute_E, brute_G, brute_H, chsch, compositions, pascal_twice, psch)
from .statistics import (DEFAULT_INTERPRETATION, DinvVariant, Interpretation,
                         StatisticUndefined, area, area_lines, dinv, stat_record)
from .verifier import CheckReport, Status, concordance, run_group

__version__ = "0.1.0"
