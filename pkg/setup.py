#!/usr/bin/env python
"""
Setup script for the SeCoNet simulator.
Provides backward compatibility with older pip/setuptools versions.
"""

import os
import re

from setuptools import find_packages, setup

# Read version from seconet/__version__.py (safe regex — avoids exec())
with open(os.path.join("seconet", "__version__.py"), encoding="utf-8") as f:
    _version_match = re.search(r'__version__\s*=\s*["\']([^"\']+)["\']', f.read())
version = {"__version__": _version_match.group(1) if _version_match else "0.0.0"}

with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

with open("requirements.txt", "r", encoding="utf-8") as f:
    requirements = [line.strip() for line in f if line.strip() and not line.startswith("#")]

setup(
    name="seconet-sim",
    version=version["__version__"],
    description="Bipartite contact-network growth, SIRS HPV transmission and vaccination strategy simulator",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "docs", "examples", "examples.*"]),
    include_package_data=True,
    install_requires=requirements,
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.0.0",
            "black>=23.0.0",
            "flake8>=6.0.0",
            "isort>=5.12.0",
            "mypy>=1.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "seconet=seconet.cli:main",
        ],
    },
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Medical Science Apps.",
    ],
    keywords="epidemic-simulation contact-network scale-free hpv vaccination centrality",
)
