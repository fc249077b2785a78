import logging
import os
import sys


class AppConfig:
    # Application settings
    APP_NAME = "Crepant Index Classifier"
    APP_VERSION = "1.0"

    # Search settings
    DEFAULT_ORACLE_R_MAX = 16
    MAX_BASKET_SIZE = 4  # every B_Q(v_Q) is at least 1/4 and they sum to 1
    MAX_WORKERS = 4
    MAX_MD_DENOMINATOR = 1000  # 1000! stays under the default int-to-str digit limit

    # Output settings
    OUTPUT_FORMATS = ("json", "csv", "markdown")
    DEFAULT_OUTPUT_FORMAT = "markdown"
    TABLE_HEADERS = ("type", "basket", "r_P")
    CSV_BASKET_SEPARATOR = ";"
    MARKDOWN_BASKET_SEPARATOR = ","
    EMPTY_BASKET_SYMBOL = "∅"
    UNEXPECTED_LABEL = "UNEXPECTED"

    # Exit codes
    EXIT_OK = 0
    EXIT_FAILURE = 1
    EXIT_USAGE = 2

    # Logging settings
    DEFAULT_LOG_LEVEL = "WARNING"
    VERBOSE_LOG_LEVEL = "INFO"
    LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

    @classmethod
    def get_max_workers(cls) -> int:
        override = os.environ.get("CREPANT_MAX_WORKERS")
        if override:
            try:
                return max(1, int(override))
            except ValueError:
                logging.warning(f"Ignoring non-integer CREPANT_MAX_WORKERS={override!r}")
        return max(1, min(cls.MAX_WORKERS, os.cpu_count() or 1))

    @classmethod
    def get_log_level(cls, verbose: bool = False) -> str:
        if verbose:
            return cls.VERBOSE_LOG_LEVEL
        return os.environ.get("CREPANT_LOG_LEVEL", cls.DEFAULT_LOG_LEVEL).upper()

    @classmethod
    def configure_logging(cls, verbose: bool = False):
        # stdout is reserved for tables and values
        logging.basicConfig(
            level=cls.get_log_level(verbose),
            format=cls.LOG_FORMAT,
            stream=sys.stderr,
        )
