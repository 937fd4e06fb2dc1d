"""Gauss diagram formulas for the coefficients of the Kauffman (Dubrovnik) and HOMFLY-PT polynomials."""
from .diagram import (BasedKnotDiagram, GaussCodeError, canonical_key, move_base_point,
                      parse_gauss_code, reverse_all_arrows, serialize, subdiagrams)
from .gdf import (GDF, CollapseError, build_A_jones, build_A_kl, enumerate_arrow_diagrams,
                  eval_pkl_direct, expand_unsigned, pair, unsigned_collapse)
from .poly import GaussianRational, LaurentPoly1, LaurentPoly2, TruncatedSeries2
from .skein import (dubrovnik_D, dubrovnik_DK, h_table, homfly, jones_from_dk,
                    jones_from_homfly, p_table)
from .state_model import StateLabel, W_arrow, W_arrow_H, dk_state_sum, run_process

__all__ = [
    "BasedKnotDiagram", "GaussCodeError", "canonical_key", "move_base_point", "parse_gauss_code",
    "reverse_all_arrows", "serialize", "subdiagrams",
    "GDF", "CollapseError", "build_A_jones", "build_A_kl", "enumerate_arrow_diagrams",
    "eval_pkl_direct", "expand_unsigned", "pair", "unsigned_collapse",
    "GaussianRational", "LaurentPoly1", "LaurentPoly2", "TruncatedSeries2",
    "dubrovnik_D", "dubrovnik_DK", "h_table", "homfly", "jones_from_dk", "jones_from_homfly", "p_table",
    "StateLabel", "W_arrow", "W_arrow_H", "dk_state_sum", "run_process",
]
