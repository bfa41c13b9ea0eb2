"""Interaction cohomology and Wu characteristics of finite complexes.

The submodules split the work the way the computation flows: simplicial
complexes and graphs, the intersecting-tuple basis, the graded derivative
and its Dirac operator, exact integer linear algebra, and on top of those
the Betti vectors, Lefschetz numbers, ring operations, connection matrices
and spectral flows.
"""

from .basis import (
    build_basis,
    euler_polynomial,
    f_matrix,
    f_tensor,
    multivariate_euler_polynomial,
    wu_characteristic,
)
from .cohomology import (
    cohomology_data,
    euler_poincare_check,
    poincare_polynomial,
)
from .connection import (
    connection_complex,
    connection_graph,
    fermi_characteristic,
    fredholm_characteristic,
    wu_via_connection_trace,
)
from .differential import dirac_and_laplacian, interaction_derivative
from .dynamics import (
    block_spectra,
    lax_deform,
    mckean_singer_supertrace,
    supersymmetry_gap,
    wave_evolve,
)
from .lefschetz import (
    automorphism_group,
    complex_automorphisms,
    lefschetz_fixed_point_check,
    lefschetz_number,
)
from .ring import (
    ProductComplex,
    RingElement,
    disjoint_union,
    kuenneth_check,
    product_cell_complex,
    ring_betti,
    ring_wu,
)
from .simplicial import (
    Complex,
    Graph,
    barycentric_refinement,
    euler_characteristic,
    euler_curvature,
    f_vector,
    generate_complex,
    inductive_dimension,
    poincare_hopf_index,
    unit_sphere,
    whitney_complex,
    zagreb_index,
)

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "Graph",
    "ProductComplex",
    "RingElement",
    "automorphism_group",
    "barycentric_refinement",
    "block_spectra",
    "build_basis",
    "cohomology_data",
    "complex_automorphisms",
    "connection_complex",
    "connection_graph",
    "dirac_and_laplacian",
    "disjoint_union",
    "euler_characteristic",
    "euler_curvature",
    "euler_poincare_check",
    "euler_polynomial",
    "f_matrix",
    "f_tensor",
    "f_vector",
    "fermi_characteristic",
    "fredholm_characteristic",
    "generate_complex",
    "inductive_dimension",
    "interaction_derivative",
    "kuenneth_check",
    "lax_deform",
    "lefschetz_fixed_point_check",
    "lefschetz_number",
    "mckean_singer_supertrace",
    "multivariate_euler_polynomial",
    "poincare_hopf_index",
    "poincare_polynomial",
    "product_cell_complex",
    "ring_betti",
    "ring_wu",
    "supersymmetry_gap",
    "unit_sphere",
    "wave_evolve",
    "whitney_complex",
    "wu_characteristic",
    "wu_via_connection_trace",
    "zagreb_index",
]
