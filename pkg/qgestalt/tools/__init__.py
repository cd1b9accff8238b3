from .synthetic import make_rng
from .selftest import SelfTest, CheckResult
