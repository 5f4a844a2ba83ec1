"""Identity registry, verification driver, typo repair and matrix cross-check."""
from .oracle import MUTATIONS, MatrixOracle, OracleResult
from .registry import BY_ID, CHECKS, GROUPS, Check, Variant, checks_in
from .repair import Candidate, RepairError, repair
from .runner import (FAIL, INFO, PASS, UNDECIDED, CheckResult, SuiteReport, UnknownGroup, evaluate_check,
                     run_check, run_suite)

__all__ = ["MUTATIONS", "MatrixOracle", "OracleResult", "BY_ID", "CHECKS", "GROUPS", "Check", "Variant",
           "checks_in", "Candidate", "RepairError", "repair", "FAIL", "INFO", "PASS", "UNDECIDED",
           "CheckResult", "SuiteReport", "UnknownGroup", "evaluate_check", "run_check", "run_suite"]
