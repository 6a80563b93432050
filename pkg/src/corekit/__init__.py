"""Partition combinatorics: hooks, cores, quotients, and their bar analogues.

The package splits into partitions (hooks, beta-sets, ell-cores and
quotients), bar_partitions (the distinct-parts theory at odd levels), blocks
(block labels and exhaustive verifiers for two core-of-core theorems and two
principal-block corollaries), enumeration (deterministic generators and the
parallel sweep driver), and cli (the corekit command).
"""

from .bar_partitions import (
    TWO_ROW,
    WITHIN_ROW,
    Bar,
    BarPartition,
    BarQuotientDecomposition,
    bar_core,
    bar_lengths,
    bar_quotient,
    bar_weight,
    bars,
    from_bar_core_and_quotient,
    is_bar_core,
    parse_bar_partition,
    remove_bar,
)
from .blocks import (
    BarBlockId,
    BlockId,
    VerificationReport,
    bar_block_id,
    block_id,
    in_principal_bar_block,
    in_principal_block,
    principal_bar_core,
    principal_core,
    verify_bar_corollary,
    verify_bar_quotient_bijection,
    verify_bar_theorem,
    verify_core_theorem,
    verify_corollary,
    verify_quotient_bijection,
)
from .enumeration import (
    SweepPlan,
    bar_partitions_of,
    cores_of,
    partitions_of,
    run_sweep,
    shard,
)
from .partitions import (
    BetaSet,
    Hook,
    Partition,
    QuotientDecomposition,
    beta_set,
    decompose,
    divisible_hooks,
    ell_core,
    ell_quotient,
    ell_weight,
    from_core_and_quotient,
    hook_lengths,
    hooks,
    is_ell_core,
    parse_partition,
    partition_of_beta,
    remove_hook,
)

__version__ = "0.1.0"

__all__ = [
    "Bar",
    "BarBlockId",
    "BarPartition",
    "BarQuotientDecomposition",
    "BetaSet",
    "BlockId",
    "Hook",
    "Partition",
    "QuotientDecomposition",
    "SweepPlan",
    "TWO_ROW",
    "VerificationReport",
    "WITHIN_ROW",
    "bar_block_id",
    "bar_core",
    "bar_lengths",
    "bar_partitions_of",
    "bar_quotient",
    "bar_weight",
    "bars",
    "beta_set",
    "block_id",
    "cores_of",
    "decompose",
    "divisible_hooks",
    "ell_core",
    "ell_quotient",
    "ell_weight",
    "from_bar_core_and_quotient",
    "from_core_and_quotient",
    "hook_lengths",
    "hooks",
    "in_principal_bar_block",
    "in_principal_block",
    "is_bar_core",
    "is_ell_core",
    "parse_bar_partition",
    "parse_partition",
    "partition_of_beta",
    "partitions_of",
    "principal_bar_core",
    "principal_core",
    "remove_bar",
    "remove_hook",
    "run_sweep",
    "shard",
    "verify_bar_corollary",
    "verify_bar_quotient_bijection",
    "verify_bar_theorem",
    "verify_core_theorem",
    "verify_corollary",
    "verify_quotient_bijection",
]
