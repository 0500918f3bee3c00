"""4-coloring complexes of surface triangulations."""

from .coloring import (
    Coloring,
    KempeChainSet,
    Parity,
    enumerate_colorings,
    homology_degree,
    j_formula,
    j_kempe,
    kempe_chains,
    kempe_change,
    parity,
)
from .complex import (
    ColoringComplex,
    Component,
    Signature,
    build_complex,
    components,
    export_complex,
    kempe_classes,
    signature,
)
from .constructions import (
    RingLabeling,
    builtin,
    q_k,
    q_k_prime,
    stack_vertex,
    triangle_sum,
)
from .enumeration import enumerate_triangulations, flip_edge
from .planarcode import read_planar_code, write_planar_code
from .surface import (
    Triangulation,
    class_degree_sum,
    euler_genus,
    from_rotation_system,
    trace_faces,
    vertex_connectivity,
)

__version__ = "0.1.0"
