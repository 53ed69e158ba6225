"""
ReportView: renders command results.

The JSON payload goes to stdout, the human summary to stderr, so stdout
stays byte-identical across runs for fixed inputs.
"""

import sys
from typing import TextIO

from controllers.experiment_controller import CommandResult
from core.complex_loader import dumps


class ReportView:
    def __init__(self, stdout: TextIO = None, stderr: TextIO = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def render(self, result: CommandResult) -> int:
        self.stdout.write(dumps(result.payload))
        self.stdout.flush()
        for line in result.summary:
            self.stderr.write(line + "\n")
        return result.exit_code

    def error(self, message: str) -> None:
        self.stderr.write(f"error: {message}\n")
