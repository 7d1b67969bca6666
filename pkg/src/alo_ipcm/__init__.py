"""Pairwise comparison matrices and interval pairwise comparison matrices over
real continuous Abelian linearly ordered groups.

Multiplicative, additive and fuzzy preference scales share one algebra here,
so reciprocity, three consistency conditions, a consistency index and an
indeterminacy index are written once and carried between scales by
isomorphisms.
"""

__version__ = "0.1.0"

from .alo_group import (
    ADDITIVE,
    DEFAULT_TOL,
    FUZZY,
    G,
    H,
    LN,
    MULTIPLICATIVE,
    SCALES,
    AloGroup,
    GroupElement,
    IsoMap,
    custom_group,
    get_scale,
    isomorphism,
)
from .analysis import Dominance, IndexPoint, Thresholds, Verdict, classify, dominance, evaluate, plot_data
from .errors import (
    AloIpcmError,
    DomainError,
    EmptyInput,
    InvalidArgument,
    InvalidMatrix,
    NotReciprocal,
    OrderTooLargeForSearch,
    OrderTooSmall,
    OrderViolation,
    ScaleMismatch,
)
from .interval import (
    GInterval,
    idistance,
    identity_interval,
    idiv,
    ile,
    ilt,
    imul,
    inorm,
    interval_equal,
    is_point,
    make_interval,
    point,
    recip_interval,
)
from .ipcm import (
    DEFAULT_PERM_CAP,
    ApproxConsistency,
    Ipcm,
    LrPair,
    TriadDistanceTable,
    TriadRecord,
    full_consistency_by_definition,
    full_consistency_by_shortcut,
    interval_indeterminacy,
    ipcm_consistency_index,
    ipcm_degenerates_to_pcm,
    ipcm_entry_indeterminacy,
    ipcm_indeterminacy_index,
    ipcm_is_approx_consistent,
    ipcm_is_full_consistent,
    ipcm_is_liu_consistent,
    ipcm_is_reciprocal,
    ipcm_lr,
    ipcm_permute,
    ipcm_transport,
    ipcm_triads,
)
from .pcm import (
    Pcm,
    pcm_consistency_index,
    pcm_is_consistent,
    pcm_is_reciprocal,
    pcm_permute,
    pcm_transport,
    validate_permutation,
)
from .serialization import load_matrix, matrix_from_dict, matrix_to_dict
