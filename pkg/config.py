import os

from dotenv import load_dotenv

load_dotenv()

# Only diagnostics verbosity comes from the environment; numeric behaviour never does.
LOG_LEVEL = os.getenv("QENTROPY_LOG_LEVEL", "WARNING")

# |q - 1| <= EPS_Q is treated as the undeformed limit.
EPS_Q = 1e-8

SUM_TOL_PER_WEIGHT = 1e-12
DEFAULT_FLOOR = 1e-9

DEFAULT_TOL = 1e-9
IDENTITY_TOL = 1e-10
DEFAULT_BAND = 1e-3

DEFAULT_N_RANGE = (2, 16)
DEFAULT_Q_RANGE = (0.05, 5.0)
DEFAULT_R_RANGE = (0.05, 5.0)
DEFAULT_X_RANGE = (1e-3, 1e3)
DEFAULT_V_RANGE = (1e-3, 1.0 - 1e-6)

DEFAULT_NODES = 64
DEFAULT_TRIALS = 1000
DEFAULT_SEED = 42

# Re-draw budget for instances whose chain overflows double precision.
MAX_REDRAWS = 64

# Offsets 10^-k used by the q -> 1 limit checks.
LIMIT_EXPONENTS = (3, 4, 5, 6)
LIMIT_FRACTION = 1e-2
