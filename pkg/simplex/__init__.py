from simplex.distribution import DivergencePair, ProbabilityDistribution, Weight, uniform, validate
from simplex.derived import be_complement, fd_complement, mixture
from simplex.sampling import sample

__all__ = [
    "DivergencePair",
    "ProbabilityDistribution",
    "Weight",
    "uniform",
    "validate",
    "be_complement",
    "fd_complement",
    "mixture",
    "sample",
]
