"""
Configuration module for SchurPos
Manages all settings, constants, and environment variables
"""

import os
import sys
from typing import Dict, Any, Optional
from dotenv import load_dotenv

from .errors import DegreeLimitError

# Load environment variables
load_dotenv()


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        print(f"⚠️ {name}={value!r} is not an integer, using {default}", file=sys.stderr)
        return default


class SchurPosConfig:
    """Configuration class for SchurPos"""

    # Transition-matrix cache (memory only when unset)
    CACHE_DIR: Optional[str] = os.getenv("SCHURPOS_CACHE_DIR") or None

    # Degree guardrails
    DEFAULT_MAX_DEGREE = _int_env("SCHURPOS_MAX_DEGREE", 8)
    MAX_DEGREE_HARD_CAP = 10

    # Verification
    WORKERS = _int_env("SCHURPOS_WORKERS", 1)
    ORACLE_VARIABLES = _int_env("SCHURPOS_ORACLE_VARIABLES", 7)

    # Output
    OUTPUT_FORMAT = os.getenv("SCHURPOS_OUTPUT", "json")
    OUTPUT_FORMATS = ("json", "text")

    # Bases of Sym (the h basis is the canonical internal form)
    BASES = ("h", "e", "p", "m", "s")

    # Families accepted by `expand`
    FAMILIES = ("kschur", "schur-p", "schur-q", "h", "e", "p", "m", "s")

    # Verification suites, one per acceptance criterion
    SUITES = {
        "degeneration": "k-Schur functions equal Schur functions once k >= degree",
        "branch-pos": "every k-Schur function is (k+1)-Schur positive",
        "kschur-pos": "k-Schur functions are Schur positive",
        "p-pos": "Schur P-functions are integral and Schur positive",
        "integrality": "one-row P_i has integral monomial coefficients",
        "coeff": "coefficient of p_i in P_i is 1/i for odd i",
        "fractional": "|coeff of p_j in e_j| = 1/j and e_j +- 2p_j/j is fractional",
        "theta": "theta(h_i) = Q_i and theta is a Hopf morphism",
        "primitive": "primitive elements of degree d are spanned by p_d",
        "ranks": "graded ranks of the SU and Sp generator chains agree in low degree",
        "omega": "omega sends k-Schur functions to k-Schur functions",
        "hopf": "canonical morphism to QSym is terminal at desk scale",
        "oracle": "basis conversions agree with explicit polynomial evaluation",
    }

    @classmethod
    def validate_config(cls) -> bool:
        """Validate that all configuration values are usable"""
        ok = True
        if cls.OUTPUT_FORMAT not in cls.OUTPUT_FORMATS:
            print(f"❌ SCHURPOS_OUTPUT must be one of {cls.OUTPUT_FORMATS}, got {cls.OUTPUT_FORMAT!r}", file=sys.stderr)
            ok = False
        if not 0 <= cls.DEFAULT_MAX_DEGREE <= cls.MAX_DEGREE_HARD_CAP:
            print(f"❌ SCHURPOS_MAX_DEGREE must lie in 0..{cls.MAX_DEGREE_HARD_CAP}", file=sys.stderr)
            ok = False
        if cls.WORKERS < 1:
            print("❌ SCHURPOS_WORKERS must be positive", file=sys.stderr)
            ok = False
        if cls.ORACLE_VARIABLES < 1:
            print("❌ SCHURPOS_ORACLE_VARIABLES must be positive", file=sys.stderr)
            ok = False
        if cls.CACHE_DIR and not os.path.isdir(cls.CACHE_DIR):
            print(f"⚠️ SCHURPOS_CACHE_DIR {cls.CACHE_DIR} does not exist yet, it will be created", file=sys.stderr)
        return ok

    @classmethod
    def check_degree(cls, degree: int, force: bool = False) -> int:
        """
        Enforce the desk-scale degree cap

        Args:
            degree: Requested maximal degree
            force: Allow degrees above the hard cap

        Returns:
            int: The accepted degree
        """
        if degree < 0:
            raise DegreeLimitError(f"degree must be non-negative, got {degree}")
        if degree > cls.MAX_DEGREE_HARD_CAP and not force:
            raise DegreeLimitError(
                f"degree {degree} exceeds the hard cap {cls.MAX_DEGREE_HARD_CAP}; pass --force to override"
            )
        return degree

    @classmethod
    def get_config_summary(cls) -> Dict[str, Any]:
        """Get a summary of current configuration"""
        return {
            'cache_dir': cls.CACHE_DIR,
            'default_max_degree': cls.DEFAULT_MAX_DEGREE,
            'max_degree_hard_cap': cls.MAX_DEGREE_HARD_CAP,
            'workers': cls.WORKERS,
            'oracle_variables': cls.ORACLE_VARIABLES,
            'output_format': cls.OUTPUT_FORMAT,
            'suites_count': len(cls.SUITES),
        }
