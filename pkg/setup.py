#!/usr/bin/env python3
"""
Setup script for bws-inference - Wright-Fisher fits, selection tests and change points
"""

import re
from pathlib import Path

from setuptools import find_packages, setup

HERE = Path(__file__).resolve().parent
VERSION_PATTERN = re.compile(r"^__version__\s*=\s*['\"]([^'\"]+)['\"]", re.M)


def long_description() -> str:
    """README contents for the package index page."""
    readme = HERE / "README.md"
    return readme.read_text(encoding="utf-8") if readme.exists() else ""


def package_version() -> str:
    """Version declared in bws_core/__init__.py."""
    init = (HERE / "bws_core" / "__init__.py").read_text(encoding="utf-8")
    found = VERSION_PATTERN.search(init)
    if found is None:
        raise RuntimeError("bws_core/__init__.py does not declare __version__")
    return found.group(1)


# Numerics, tables, config and CLI
CORE_REQUIREMENTS = [
    "numpy>=1.24.0",
    "scipy>=1.10.0",
    "pandas>=2.0.0",
    "pydantic>=2.0.0",
    "pydantic-settings>=2.0.0",
    "python-dotenv>=1.0.0",
    "pyyaml>=6.0.0",
    "rich>=13.0.0",
    "typer>=0.9.0",
]

TEST_REQUIREMENTS = [
    "pytest>=7.0.0",
    "pytest-cov>=4.0.0",
]

EXTRAS_REQUIRE = {
    "dev": TEST_REQUIREMENTS
    + [
        "black>=23.0.0",
        "isort>=5.12.0",
        "flake8>=6.0.0",
        "mypy>=1.0.0",
    ],
}

setup(
    name="bws-inference",
    version=package_version(),
    description="Maximum-likelihood Wright-Fisher inference with the Beta-with-Spikes approximation",
    long_description=long_description(),
    long_description_content_type="text/markdown",
    packages=find_packages(include=["bws_core", "bws_core.*"]),
    python_requires=">=3.10",
    install_requires=CORE_REQUIREMENTS,
    extras_require=EXTRAS_REQUIRE,
    tests_require=TEST_REQUIREMENTS,
    entry_points={"console_scripts": ["bws=bws_core.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Bio-Informatics",
        "Topic :: Text Processing :: Linguistic",
    ],
    keywords="wright-fisher selection drift change-point bootstrap language-change",
    zip_safe=False,
)
