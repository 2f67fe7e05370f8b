#! /usr/bin/env python
"""
---------------------
FuzzNormTools module.
---------------------

This module was written to make the correspondence between fuzzy norms and
quasiconcave generator functions executable.
The generators and correspondence modules evaluate fuzzy norms, the decomposition
module extracts the ascending family of crisp alpha-cut norms, and the verification
module checks the axioms on seeded samples.

"""
__author__ = 'FuzzNorm developers'
__version__ = '1.0.0'
__date__ = '2026-10-17'
__citation__ = """
% If your work makes use of FuzzNormTools please cite the repository and the
% version you used.
"""
