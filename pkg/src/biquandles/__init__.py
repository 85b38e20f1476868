"""Finite quandles and biquandles: constructions, automorphism groups,
Yang-Baxter maps, and virtual-link coloring invariants."""

from .core import (
    AxiomReport,
    FiniteBiquandle,
    FiniteQuandle,
    Permutation,
    PermutationGroup,
    associated_quandle,
    biquandle_of_quandle,
    check_biquandle,
    check_quandle,
    check_ybe,
    inner_group,
    is_connected,
    is_faithful,
    is_involutory_biquandle,
    is_involutory_quandle,
    orbits,
    yang_baxter_map,
)
from .errors import AxiomError, DomainError, MalformedInput
from .groups import FiniteGroup, GroupAutomorphism, automorphism_group, cyclic_group, symmetric_group
from .group_constructions import (
    alexander_biquandle,
    alexander_quandle,
    conj_quandle,
    core_quandle,
    dihedral_quandle,
    gen_alexander_biquandle,
    gen_dihedral_biquandle,
    takasaki,
    trivial_quandle,
    wada_biquandle,
)
from .structures import (
    BiquandleStructure,
    biquandle_from_structure,
    constant_structure,
    structure_of_biquandle,
    validate_structure,
)
from .combinators import (
    holomorph_biquandle,
    product_biquandle,
    semidirect_biquandle,
    union_biquandle_constant,
    union_biquandle_general,
    union_quandle,
)
from .automorphisms import biquandle_aut, quandle_aut
from .enumeration import are_isomorphic, enumerate_quandles, enumerate_trivial_structures
from .links import (
    VirtualLinkDiagram,
    builtin_diagrams,
    coloring_count_biquandle,
    coloring_count_quandle,
    parse_diagram,
)

__version__ = "0.1.0"
