"""
Version information for the simulator.
"""

__version__ = "1.2.0"
__version_info__ = (1, 2, 0)

# Version history
# 1.2.0 - Exact zeta-MLE power-law fit, proportional selection flag,
#         `report` subcommand with paired sign tests and Spearman trends
# 1.1.0 - Parallel sweep runner (joblib) with paired per-replicate seeds;
#         SVG figure grid; summary CSV reader
# 1.0.0 - Initial release: SeCoNet growth, SIRS engine, eight strategies
