"""Exact evaluation of family Seiberg-Witten wall-crossing formulas."""

from .blowup import (
    FMSpec, FMSummand, Geometry, fm_expected_dimension, fm_normalize, fm_summands,
    fm_t4_nodal, fm_wcn_n1, fm_wcn_n1_mixed,
)
from .charclass import (
    CharData, RootVector, chern_closed_form, chern_general, chern_recursion,
    segre_closed_form, twisted_sym_power_chern,
)
from .crossing import (
    WcnValue, kodaira_series_q1, kodaira_series_q3, sw_from_winding, wcn_mixed, wcn_pure,
)
from .errors import CrossCheckError, ParityError, ValidationError
from .exterior import (
    ExtElem, GradedSeries, ext_mul, fibre_integrate, series_exp, series_inverse,
    series_mul, top_coefficient,
)
from .index import IndexCharacter, family_index_oracle, index_character
from .manifold import (
    ManifoldModel, OneCycle, SpincClass, dump_manifold, expected_dimension, load_manifold,
)
from .multiseries import MultiSeries
from .presets import preset

__version__ = "0.1.0"
