"""Insertion algorithms for set-partition diagram monoids.

Bidirectional maps between set-partition diagrams and pairs of vacillating
tableaux, between integer sequences and (standard tableau, vacillating
tableau) pairs, the growth-diagram realization of the same maps, and
exhaustive verification of the associated dimension identities.
"""

from .bijections import VacillatingTableau, di_insert, di_invert, vac_insert, vac_invert
from .diagrams import (
    FAMILIES,
    InsertionSequence,
    ResourceLimitError,
    SetPartitionDiagram,
    compose,
    diagram_from_insertion_sequence,
    enumerate_diagrams,
    flip,
    identity_diagram,
    in_ideal,
    insertion_sequence,
    is_brauer,
    is_permutation,
    is_planar,
    is_planar_rook,
    is_rook,
    is_temperley_lieb,
    parse_diagram,
    propagating_number,
    singletons_diagram,
    standard_edges,
)
from .enumeration import (
    BratteliDiagram,
    bell,
    binomial,
    build_bratteli,
    catalan,
    m_k_lambda,
    odd_double_factorial,
    verify_bell,
    verify_binomial,
    verify_catalan,
    verify_ideal,
    verify_nk,
    verify_odd_bell,
    verify_symmetric,
)
from .growth import (
    GrowthDiagram,
    build_xmarks,
    forward_fill,
    inverse_local_rule,
    local_rule,
    reconstruct,
    staircase_paths,
)
from .partitions import (
    Partition,
    addable_boxes,
    bar,
    boxes_added,
    contains,
    enumerate_gamma,
    f_lambda,
    format_partition,
    in_lambda_nk,
    parse_partition,
    partitions_of,
    removable_boxes,
    star,
    union,
)
from .tableaux import StandardTableau, jdt_delete, jdt_reverse, rsk_insert, rsk_uninsert

__version__ = "0.1.0"
