"""
vertex_loader.py
Loads vertex matrices from CSV files as exact rationals.

Cells are read as strings (never as floats) and parsed with parse_decimal,
optionally rounded first with round_decimal.
"""

import os
from typing import List, Optional

import pandas as pd
from loguru import logger

from core.exactla import Vector, parse_decimal, round_decimal
from core.exceptions import DecimalParseError, ValidationError


class VertexLoader:
    """
    Reads one point per CSV row. A header row is skipped when its first cell
    is not a decimal literal.
    """

    SUPPORTED_EXTENSIONS = {".csv", ".txt"}

    def __init__(self, round_digits: Optional[int] = None):
        if round_digits is not None and round_digits < 0:
            raise ValidationError(f"Rounding digits must be non-negative, got {round_digits}", round_digits)
        self.round_digits = round_digits

    def parse_cell(self, text: str):
        if self.round_digits is None:
            return parse_decimal(text)
        return round_decimal(text, self.round_digits)

    @staticmethod
    def _is_numeric(text: str) -> bool:
        try:
            parse_decimal(text)
            return True
        except DecimalParseError:
            return False

    def load(self, file_path: str) -> List[Vector]:
        if not os.path.exists(file_path):
            logger.error(f"Vertex file not found: {file_path}")
            raise FileNotFoundError(f"Vertex file not found: {file_path}")
        ext = os.path.splitext(file_path)[1].lower()
        if ext not in self.SUPPORTED_EXTENSIONS:
            logger.warning(f"Unexpected vertex file extension {ext!r}; reading as CSV")

        frame = pd.read_csv(file_path, header=None, dtype=str, keep_default_na=False,
                            skipinitialspace=True, comment="#")
        rows = [[str(cell).strip() for cell in row] for row in frame.itertuples(index=False, name=None)]
        rows = [row for row in rows if any(row)]
        if rows and not self._is_numeric(rows[0][0]):
            logger.debug(f"Skipping header row {rows[0]}")
            rows = rows[1:]
        if not rows:
            raise ValidationError(f"No vertex rows in {file_path}", file_path)

        points = []
        for r, row in enumerate(rows):
            try:
                points.append(tuple(self.parse_cell(cell) for cell in row))
            except DecimalParseError as e:
                raise DecimalParseError(f"Row {r + 1} of {file_path}: {e}", text=e.text, position=e.position) from e
        logger.info(f"Loaded {len(points)} points of dimension {len(points[0])} from {file_path}"
                    + (f" (rounded to {self.round_digits} places)" if self.round_digits is not None else ""))
        return points
