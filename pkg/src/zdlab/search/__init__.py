from .enumeration import EnumerationSpec, corpus, enumerate_structures, random_structure
from .hunt import HuntResult, find_counterexample
from .suites import SUITES, Claim, SuiteReport, run_suite, suite_names
from .triangular import TriangularComparison, compare_triangular_characterization, triangular_corpus

__all__ = [
    "Claim", "EnumerationSpec", "HuntResult", "SUITES", "SuiteReport", "TriangularComparison",
    "compare_triangular_characterization", "corpus", "enumerate_structures", "find_counterexample",
    "random_structure", "run_suite", "suite_names", "triangular_corpus",
]
