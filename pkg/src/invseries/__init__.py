"""Exact formal power series, sequence inversion pairs and Stirling-number formulas."""

from .errors import ConsistencyError, DomainError, InvSeriesError, UsageError
from .inversion import (
    SelfInverseSeries,
    Sequence,
    TransformKernel,
    binomial_kernel,
    build_kernel,
    inverse_pair_transform,
    involution_k,
    orthogonality_sums,
    self_inverse_complete,
    theorem41_coefficient,
    transform_apply,
)
from .partitions import MultiplicityVector, enumerate_multiplicity_vectors, partition_count
from .powerseries import (
    PolyT,
    Series,
    coeff_pow_poly_t,
    named_series,
    series_add,
    series_compose,
    series_mul,
    series_pow,
    series_reverse_full,
    series_reverse_lagrange,
)
from .stirling import (
    stirling_partition_formula,
    stirling_recurrence,
    stirling_shift,
    stirling_via_gf,
)

__version__ = "0.1.0"
