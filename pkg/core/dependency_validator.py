# Dependency Validator for bierkit
# Checks for critical dependencies before the CLI dispatches a command.

import importlib.util
from typing import Dict, List

from core.exceptions import DependencyValidationError

REQUIRED_LIBRARIES = [
    # Logging and exact CSV reading
    "loguru",
    "pandas",
]

OPTIONAL_LIBRARIES = [
    # Only needed to run the test suites
    "pytest",
    "hypothesis",
]


def check_library_installed(lib_name: str) -> bool:
    # Returns True if library is importable
    return importlib.util.find_spec(lib_name) is not None


def validate_dependencies() -> Dict[str, List[str]]:
    # Returns lists of missing dependencies for diagnostics
    return {
        "missing_required": [lib for lib in REQUIRED_LIBRARIES if not check_library_installed(lib)],
        "missing_optional": [lib for lib in OPTIONAL_LIBRARIES if not check_library_installed(lib)],
    }


def format_dependency_report(report: Dict[str, List[str]]) -> List[str]:
    lines = []
    if report["missing_required"]:
        lines.append("Missing required libraries: " + ", ".join(report["missing_required"]))
    if report["missing_optional"]:
        lines.append("Missing optional libraries (tests unavailable): " + ", ".join(report["missing_optional"]))
    return lines


def validate_or_raise() -> Dict[str, List[str]]:
    # Raises if any required library is missing
    report = validate_dependencies()
    if report["missing_required"]:
        missing = report["missing_required"]
        raise DependencyValidationError(
            f"Required libraries are missing: {', '.join(missing)}. Install them with: pip install -r requirements.txt",
            dependency=missing[0])
    return report
