"""Message importance measure: an information measure that emphasises rare events.

Includes coefficient-selection rules, a minority-prior estimator, and Bayes /
Chernoff decision-error tools for minority-class detection.
"""

from .distributions import (Distribution, bernoulli, make_distribution, merge_events, mixture,
                            product, split_event, uniform)
from .errors import MimError
from .measures import (ImportanceCoefficient, Provenance, binary_mim_approx, importance_weight,
                       mim, mim_asymptote, mim_lower_bound, renyi, shannon)

__all__ = [
    "Distribution", "bernoulli", "make_distribution", "merge_events", "mixture", "product",
    "split_event", "uniform", "MimError", "ImportanceCoefficient", "Provenance",
    "binary_mim_approx", "importance_weight", "mim", "mim_asymptote", "mim_lower_bound",
    "renyi", "shannon",
]
