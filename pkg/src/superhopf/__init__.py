"""Exact computations with finite-dimensional Hopf algebras and Hopf superalgebras."""

from .algebra import AlgebraData, check_algebra, radical, quotient_algebra, subalgebra_generated, characters
from .catdim import (
    FusionRingData,
    IntPoly,
    catdim_of_rep,
    dim_candidates,
    fpdim,
    has_integer_root,
    integrality_scan,
)
from .chevalley import (
    Representation,
    chevalley_condition3,
    chevalley_condition4,
    chevalley_condition5,
    chevalley_report,
    is_semisimple_rep,
    rep_2dim,
    tensor_rep,
)
from .correspondence import (
    to_ordinary,
    to_super,
    transport_r_to_ordinary,
    transport_r_to_super,
    transport_twist,
    transport_twist_inverse,
)
from .exact import CycScalar, Matrix, Subspace, Tensor3, kron, mat_kernel, zeta
from .hopf import (
    HopfData,
    PairElement,
    check_hopf,
    coradical,
    dual_hopf,
    generated_by_grouplikes_and_skewprims,
    grouplikes,
    is_hopf_ideal,
    quotient_hopf,
    skew_primitives,
    sub_hopf_generated,
)
from .superalg import (
    GroupTable,
    SuperHopfData,
    check_super_hopf,
    cocommutative_check,
    decompose_cocommutative,
    exterior_hopf,
    group_algebra,
    koszul_flip,
    overline,
    super_tensor_square_mult,
    supergroup_algebra,
    yd_biproduct,
)
from .triangular import (
    TriangularHopf,
    check_quasitriangular,
    check_triangular,
    drinfeld_element,
    minimal_part,
    r_u,
    sweedler,
)
from .twist import check_twist, exp_twist, sweedler_j, twist_hopf, twist_r

__version__ = "0.1.0"
