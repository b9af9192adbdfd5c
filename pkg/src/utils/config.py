"""Configuration management for racopt."""

import os
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv


class Config:
    """Configuration loader and validator."""

    def __init__(self):
        """Initialize configuration from environment variables."""
        load_dotenv()

        # Enumeration limits
        self.word_cap = int(os.getenv("RACOPT_CAP", "100000000"))
        self.oracle_cap = int(os.getenv("RACOPT_ORACLE_CAP", "20000000"))
        self.optimizer_limit = int(os.getenv("RACOPT_OPTIMIZER_LIMIT", "1000"))
        self.batch_size = int(os.getenv("RACOPT_BATCH_SIZE", "65536"))

        # Presentation
        self.decimal_digits = int(os.getenv("RACOPT_DIGITS", "12"))

        # Logging
        self.log_level = os.getenv("LOG_LEVEL", "WARNING")
        log_file = os.getenv("LOG_FILE")
        self.log_file = Path(log_file) if log_file else None

    def validate(self) -> tuple[bool, Optional[str]]:
        """
        Validate configuration.

        Returns:
            Tuple of (is_valid, error_message)
        """
        if self.word_cap <= 0:
            return False, "RACOPT_CAP must be a positive integer"

        if self.oracle_cap <= 0:
            return False, "RACOPT_ORACLE_CAP must be a positive integer"

        if self.optimizer_limit < 0:
            return False, "RACOPT_OPTIMIZER_LIMIT must not be negative"

        if self.batch_size <= 0:
            return False, "RACOPT_BATCH_SIZE must be a positive integer"

        if self.decimal_digits <= 0:
            return False, "RACOPT_DIGITS must be a positive integer"

        if self.log_file is not None:
            self.log_file.parent.mkdir(parents=True, exist_ok=True)

        return True, None


_default: Optional[Config] = None


def get_config() -> Config:
    """Return the process-wide configuration, loading it on first use."""
    global _default
    if _default is None:
        _default = Config()
    return _default
