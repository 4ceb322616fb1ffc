"""
Global constants for the simulator.

Model defaults (age table, calibrated parameters), output column orders and
logging settings live here so the config layer, the engine and the writers
all read the same values.
"""

from seconet.__version__ import __version__

# ===== Application Info =====
APP_NAME = "SeCoNet"
APP_VERSION = __version__
APP_DESCRIPTION = "Contact-network growth, SIRS HPV transmission and vaccination sweeps"

# ===== Population =====
# Five-year age buckets (inclusive lower, inclusive upper) and their weights.
AGE_BUCKETS = [
    (15, 19), (20, 24), (25, 29),
    (30, 34), (35, 39), (40, 44),
    (45, 49), (50, 54), (55, 59),
]
DEFAULT_AGE_WEIGHTS = [0.221, 0.555, 0.141, 0.044, 0.018, 0.018, 0.001, 0.001, 0.001]
VIRGIN_AGE_CUTOFF = 18      # excluded from the initial seed links only

FEMALE = 1
MALE = -1
DEFAULT_FEMALE_FRACTION = 0.59

# ===== Growth =====
DEFAULT_POPULATION_SIZE = 3000
DEFAULT_INITIAL_LINKS = 10
DEFAULT_JOINS_PER_STEP = 100
DEFAULT_LINKS_PER_JOIN = 2
DEFAULT_FITNESS_FLOOR = 0.5         # epsilon
DEFAULT_MEAN_AGE_GAP = 3.5          # <eta>
DEFAULT_HORIZON = 1000              # T, days
DEFAULT_MEAN_DELTA = 100.0          # <delta>, days
DEFAULT_GAMMA_SHAPE = 2.0
DEFAULT_SECONDARY_RETRIES = 50
WEIGHT_SUM_TOLERANCE = 1e-9

# ===== Epidemic =====
DEFAULT_BETA = 0.13
DEFAULT_CLEARANCE_MEAN = 330.0      # 11 months of 30 days
DEFAULT_RHO_FEMALE = 0.427
DEFAULT_RHO_MALE = 0.188
# Illustrative only: the calibrated prevalences are not published as numbers.
ILLUSTRATIVE_INIT_PREVALENCE_FEMALE = 0.10
ILLUSTRATIVE_INIT_PREVALENCE_MALE = 0.05
DEFAULT_F_EARLY = 0.5
DEFAULT_F_LATE = 1.0 / 7.0
DEFAULT_EARLY_WINDOW = 14

# ===== Vaccination =====
DEFAULT_SESSION_DAYS = [6, 13, 20, 27]
DEFAULT_COVERAGE_FRACTION = 0.10
VACCINE_AGE_CUTOFF = 26

STRATEGY_NONE = "none"
STRATEGY_AGE = "age"
STRATEGY_RING = "ring"
STRATEGY_DEGREE = "degree"
STRATEGY_BETWEENNESS = "betweenness"
STRATEGY_CLOSENESS = "closeness"
STRATEGY_PERCOLATION = "percolation"
STRATEGY_EIGENVECTOR = "eigenvector"
# Order is the legend / colour order of every figure.
STRATEGIES = [
    STRATEGY_NONE,
    STRATEGY_AGE,
    STRATEGY_RING,
    STRATEGY_DEGREE,
    STRATEGY_BETWEENNESS,
    STRATEGY_CLOSENESS,
    STRATEGY_PERCOLATION,
    STRATEGY_EIGENVECTOR,
]
CENTRALITY_STRATEGIES = STRATEGIES[3:]

# ===== Centrality =====
DEFAULT_EIGEN_TOLERANCE = 1e-10
DEFAULT_EIGEN_MAX_ITERATIONS = 10_000

# ===== Topology =====
DEFAULT_POWERLAW_KMIN = 2
DEFAULT_POWERLAW_MIN_TAIL = 10

# ===== Harness =====
DEFAULT_REPLICATES = 30
DEFAULT_PLOT_BINS = 8
SIGNIFICANT_DIGITS = 6
MISSING_VALUE = "NA"

# ===== Output columns (compatibility contract) =====
DAILY_COLUMNS = [
    "day", "S", "I", "R", "V",
    "S_f", "I_f", "R_f", "V_f",
    "S_m", "I_m", "R_m", "V_m",
    "new_inf", "new_inf_f", "new_inf_m",
]
TOPOLOGY_COLUMNS = ["avg_degree", "gamma", "aspl", "clustering_sq", "clustering_tri"]
EPI_COLUMNS = [
    "peak_inc", "peak_day", "cum_inc",
    "peak_inc_f", "peak_day_f", "cum_inc_f",
    "peak_inc_m", "peak_day_m", "cum_inc_m",
]
SUMMARY_COLUMNS = ["sweep_id", "seed", "strategy", *TOPOLOGY_COLUMNS, *EPI_COLUMNS]
EDGE_COLUMNS = ["female_id", "male_id", "created_at", "expected_duration", "kind"]
NODE_COLUMNS = ["id", "age", "gender", "delta", "lsp", "join_time"]
AUDIT_COLUMNS = ["day", "strategy", "doses_available", "doses_used", "chosen_ids"]
ERROR_COLUMN = "error"
SCORE_COLUMNS = ["node_id", "score"]
SIGN_TEST_COLUMNS = [
    "sweep_id", "metric", "strategy", "baseline",
    "n_pairs", "better", "ties", "worse", "mean_diff", "p_value",
]
CORRELATION_COLUMNS = ["strategy", "topology_metric", "epi_metric", "n", "spearman_rho", "p_value"]

# ===== Output files =====
DAILY_FILE_NAME = "daily.csv"
SUMMARY_FILE_NAME = "summary.csv"
EDGES_FILE_NAME = "edges.csv"
NODES_FILE_NAME = "nodes.csv"
TOPOLOGY_FILE_NAME = "topology.json"
AUDIT_FILE_NAME = "vaccination_audit.csv"
SIGN_TEST_FILE_NAME = "report_sign_tests.csv"
CORRELATION_FILE_NAME = "report_correlations.csv"
SCORES_DIR_NAME = "scores"
PLOTS_DIR_NAME = "plots"

# ===== Logging Constants =====
LOGGER_NAME = "SeCoNet"
CLI_LOGGER_NAME = "SeCoNetCLI"
LOG_ENV_VAR = "SECONET_LOG"
LOG_FORMAT_ENV_VAR = "SECONET_LOG_FORMAT"
DEFAULT_LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# ===== CLI exit codes =====
EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_RUNTIME_ERROR = 2
