"""Complex exterior algebra and determinant/distance inequalities for simplices in CP^n."""

from .algebra import as_vector, determinant, determinant_cofactor, dot, herm_norm
from .config import DEFAULT_TOL, Tolerances
from .errors import (
    ContractError,
    DegenerateInputError,
    GradeError,
    NormalizationError,
    OracleSizeError,
    ParameterError,
    ProjSimplexError,
    SamplingError,
    SearchFailure,
)
from .exterior import Blade, blade_dot, blade_herm_norm, gram_det, hadamard_report, wedge
from .hodge import L_map, box_det, generalized_cross, lagrange_vector, multicross
from .projective import (
    IsoscelesParams,
    ProjHyperplane,
    ProjPoint,
    RegularParams,
    Simplex,
    check_inequalities,
    fs_point_distance,
    fs_point_hyperplane_distance,
    make_isosceles,
    make_regular,
    normalize,
    simplex_from_faces,
    simplex_from_vertices,
    vertex_opposite_distance,
)
from .experiments import (
    ExperimentRecord,
    OptResult,
    conjecture_search,
    equality_census,
    run_figure,
    sample_random_simplex,
)

__version__ = "0.1.0"
