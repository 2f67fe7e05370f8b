#! /usr/bin/env python
"""
Setup for FuzzNormTools
"""
import os
from setuptools import setup

# Utility function to read the README file.
# Used for the long_description.


def read(fname):
    """Read a file"""
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


def get_version():
    """Get the version number of FuzzNormTools"""
    import FuzzNormTools
    return FuzzNormTools.__version__


# default_rng needs numpy 1.17
reqs = ['numpy>=1.17',
        'scipy>=1.0',
        'astropy>=3.0']

setup(
    name="FuzzNormTools",
    version=get_version(),
    author="FuzzNorm developers",
    description="Fuzzy norms from quasiconcave generators, their alpha-cut decomposition, and seeded axiom checks.",
    long_description=read('README.md'),
    long_description_content_type='text/markdown',
    packages=['FuzzNormTools'],
    install_requires=reqs,
    scripts=['scripts/fuzznorm'],
    python_requires='>=3.6',
    setup_requires=['pytest-runner'],
    tests_require=['pytest', 'hypothesis']
)
