from .config import SuiteConfig
from .report import (EXACT_PASS, FAIL, INCONCLUSIVE, NUMERIC_PASS, CheckReport, SubCheck,
                     reports_to_csv, reports_to_json)
from .suites import SUITES, run_suite, run_suites
from .coverage import COVERAGE

__all__ = ["SuiteConfig", "CheckReport", "SubCheck", "EXACT_PASS", "NUMERIC_PASS", "FAIL",
           "INCONCLUSIVE", "reports_to_csv", "reports_to_json", "SUITES", "run_suite",
           "run_suites", "COVERAGE"]
