"""
SeCoNet: bipartite contact-network growth, SIRS HPV transmission and
vaccination strategy experiments.
"""

from seconet.__version__ import __version__

__all__ = ["__version__"]
