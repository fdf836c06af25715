"""Automatic enumeration schemes for finitely based permutation classes."""
from .errors import ContractError, InvalidInputError, ResourceError
from .oracle import brute_avoiders, brute_sequence, compare
from .perm import (
    EMPTY, Basis, Perm, avoids_all, children, contains, delete_at, is_simple,
    normalize_basis, parse_basis, parse_perm, perm_sum, standardize, symmetry,
)
from .reducibility import (
    GapIdeal, compute_J, es_plus_reducible, es_reducible, ideal_member, minimal_elements,
    reduction_gap_basis,
)
from .scheme import (
    Frontier, Scheme, SchemeNode, build_scheme, eval_count, eval_sequence, export,
    import_scheme, scheme_depth, verify_scheme,
)
from .triage import (
    enumerate_simple, finlabel_applicable, insertion_regular, sb_basis, simple_finiteness,
    triage,
)
from .zset import gap_delete, gap_split, zset_count, zset_members

__version__ = "0.1.0"
