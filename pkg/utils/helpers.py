import argparse
import json
import logging
from fractions import Fraction
from typing import Callable, Optional, Sequence

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from data.models import Basket
from services.basket import parse_basket_document
from utils.config import AppConfig
from utils.errors import BasketFormatError

logger = logging.getLogger(__name__)


class FileHelper:
    @staticmethod
    def load_basket(path: str) -> Basket:
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                document = json.load(handle)
        except OSError as e:
            raise BasketFormatError(f"cannot read {path}: {e.strerror}") from e
        except json.JSONDecodeError as e:
            raise BasketFormatError(f"{path} is not valid JSON: {e.msg} (line {e.lineno})") from e
        except UnicodeDecodeError as e:
            raise BasketFormatError(f"{path} is not UTF-8 text: {e.reason}") from e
        except (ValueError, RecursionError) as e:
            # oversized integer literals and pathological nesting
            raise BasketFormatError(f"{path} could not be decoded: {e}") from e

        basket = parse_basket_document(document)
        logger.info(f"Loaded basket with {len(basket)} entries from {path}")
        return basket

    @staticmethod
    def write_output(text: str, filename: Optional[str] = None):
        if not text.endswith("\n"):
            text += "\n"
        if filename is None:
            sys.stdout.write(text)
            return
        with open(filename, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
        logger.info(f"Wrote {filename}")


class ValidationHelper:
    @staticmethod
    def int_at_least(minimum: int) -> Callable[[str], int]:
        """argparse type accepting integers >= minimum"""
        def parse(value: str) -> int:
            try:
                number = int(value)
            except ValueError:
                raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
            if number < minimum:
                raise argparse.ArgumentTypeError(f"{number} is below the minimum {minimum}")
            return number
        return parse


class FormatHelper:
    @staticmethod
    def format_fraction(value: Fraction) -> str:
        # str(Fraction) already prints "p/q", or "p" when q == 1
        return str(Fraction(value))

    @staticmethod
    def format_tuples(data: Sequence[Sequence[int]], separator: str,
                      empty: str = AppConfig.EMPTY_BASKET_SYMBOL) -> str:
        if not data:
            return empty
        return separator.join("(" + ",".join(str(x) for x in item) + ")" for item in data)
