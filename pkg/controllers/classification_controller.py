"""
Classification Controller - coordinates the enumeration stages and the oracle
cross-check for the command-line layer
"""

import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional, Set

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from data.models import Basket, ClassificationRow, Stage
from services.classify import enumerate_table1, oracle_enumerate, refine_to_table2
from utils.config import AppConfig

logger = logging.getLogger(__name__)


@dataclass
class OracleReport:
    r_max: int
    oracle_size: int
    missing: List[Basket] = field(default_factory=list)
    unexpected: List[Basket] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.missing and not self.unexpected


@dataclass
class ClassificationState:
    """Cached stage results"""
    table1: Optional[List[ClassificationRow]] = None
    table2: Optional[List[ClassificationRow]] = None


class ClassificationController:
    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers or AppConfig.get_max_workers()
        self.state = ClassificationState()

    def classify(self, stage: Stage) -> List[ClassificationRow]:
        """Rows of the requested stage, computing earlier stages on demand"""
        try:
            if self.state.table1 is None:
                start_time = time.time()
                self.state.table1 = enumerate_table1()
                self._update_status(
                    f"Enumerated {len(self.state.table1)} J types in {time.time() - start_time:.2f}s"
                )
            if stage is Stage.J:
                return list(self.state.table1)

            if self.state.table2 is None:
                start_time = time.time()
                self.state.table2 = refine_to_table2(self.state.table1, self.max_workers)
                self._update_status(
                    f"Refined to {len(self.state.table2)} J~ types in {time.time() - start_time:.2f}s"
                )
            return list(self.state.table2)

        except Exception as e:
            self._handle_error(f"Classification failed: {e}")
            raise

    def check_oracle(self, r_max: int = AppConfig.DEFAULT_ORACLE_R_MAX) -> OracleReport:
        """Compare the structured Table 2 search with the brute-force oracle"""
        structured: Set[Basket] = {row.basket for row in self.classify(Stage.JTILDE)}
        try:
            start_time = time.time()
            oracle: Set[Basket] = {found.basket for found in oracle_enumerate(r_max)}
        except Exception as e:
            self._handle_error(f"Oracle enumeration failed: {e}")
            raise

        report = OracleReport(
            r_max=r_max,
            oracle_size=len(oracle),
            missing=sorted(oracle - structured, key=lambda b: b.triples),
            unexpected=sorted(structured - oracle, key=lambda b: b.triples),
        )
        if report.agrees:
            self._update_status(
                f"Oracle (r <= {r_max}) agrees on {len(oracle)} baskets in {time.time() - start_time:.2f}s"
            )
        else:
            self._handle_error(
                f"Oracle mismatch: {len(report.missing)} missing, {len(report.unexpected)} unexpected"
            )
        return report

    def _update_status(self, message: str):
        logger.info(message)

    def _handle_error(self, error_message: str):
        logger.error(error_message)
