"""Exact checks of the pentagonal number theorem, Zagier's identity and
their relatives, by truncated series algebra and by enumerating Franklin's
involution on partitions into distinct parts."""

from .series import (
    INF,
    QSeries,
    XQSeries,
    first_mismatch,
    lambert_series,
    pentagonal_series,
    pochhammer_q,
    qs_add,
    qs_mul,
    qs_sub,
    xq_diff_x,
    xq_eval_x1,
    xq_pochhammer,
    xq_sub_x_to_qx,
)
from .partitions import (
    FranklinClass,
    FranklinKind,
    Partition,
    PartitionStats,
    classify_franklin,
    enumerate_distinct,
    franklin_map,
    partition_stats,
)
from .identities import (
    SForm,
    WeightSelector,
    diff_bridge,
    nsum_lhs,
    pentagonal_census,
    recurrence_residual,
    s_series,
    signed_partition_sum,
    x_identity_rhs,
    zagier_lhs,
    zagier_rhs,
)
from .dsl import eval_expr, parse, run_verify

__version__ = "0.1.0"
