import cmath
import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def to_complex(x) -> complex:
    """Numerical value of a Cyclotomic, for oracle comparisons."""
    n = x.order
    return sum(float(c) * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(x.coords))
