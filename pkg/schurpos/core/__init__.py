"""
SchurPos Core Module
Exact symmetric functions, k-Schur branching and Schur positivity checks
"""

__version__ = "1.0.0"
__author__ = "SchurPos Team"
__description__ = "Desk-scale verification of affine Schubert positivity for symmetric functions"
