"""knotinvert: decide knot non-invertibility by counting knot-group
homomorphisms onto finite permutation groups, with Alexander and Jones
polynomials for contrast (both are blind to orientation reversal).
"""

__version__ = "0.1.0"

from .diagram import Crossing, Diagram, PDError, parse_pd, table_lookup, table_names
from .laurent import LaurentPoly
from .wirtinger import Relation, WirtingerPresentation, presentation, validate
from .permgroup import (
    ConjClass,
    GroupFileError,
    PermGroup,
    Permutation,
    builtin_group,
    find_class_rep,
    load_group_file,
    parse_cycles,
    subgroup_order,
)
from .alexander import alexander_poly, fox_matrix, is_symmetric
from .bracket import CrossingLimitError, jones, kauffman_bracket
from .homsearch import (
    HomCountReport,
    SearchSpec,
    Verdict,
    count_homs,
    invertibility_test,
    orbit_reduce,
    plan_order,
)

__all__ = [
    "Crossing",
    "Diagram",
    "PDError",
    "parse_pd",
    "table_lookup",
    "table_names",
    "LaurentPoly",
    "Relation",
    "WirtingerPresentation",
    "presentation",
    "validate",
    "ConjClass",
    "GroupFileError",
    "PermGroup",
    "Permutation",
    "builtin_group",
    "find_class_rep",
    "load_group_file",
    "parse_cycles",
    "subgroup_order",
    "alexander_poly",
    "fox_matrix",
    "is_symmetric",
    "CrossingLimitError",
    "jones",
    "kauffman_bracket",
    "HomCountReport",
    "SearchSpec",
    "Verdict",
    "count_homs",
    "invertibility_test",
    "orbit_reduce",
    "plan_order",
    "__version__",
]
