import os
import logging
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('json', 'tsv')


def _env_int(name, default):
    """Read an integer environment variable, falling back to the default"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring malformed {name}={raw!r}, using {default}")
        return default


class Config:
    """Configuration management for KPIERI"""

    # Verification grid defaults (coordinate bounds)
    LAMBDA_BOX = _env_int('KPIERI_LAMBDA_BOX', 1)
    MU_BOX = _env_int('KPIERI_MU_BOX', 1)

    # Upper bound on |T^lambda| during path generation
    MAX_PATHS = _env_int('KPIERI_MAX_PATHS', 20000)

    # Parallel grid evaluation
    JOBS = _env_int('KPIERI_JOBS', 1)

    # Largest supported rank (F4 has 1152 elements)
    MAX_RANK = min(_env_int('KPIERI_MAX_RANK', 4), 4)

    # Output and logging
    OUTPUT_FORMAT = os.getenv('KPIERI_FORMAT', 'json').lower()
    LOG_LEVEL = os.getenv('KPIERI_LOG_LEVEL', 'WARNING').upper()
    LOG_DIR = os.getenv('KPIERI_LOG_DIR', 'logs')
    REPORT_DIR = os.getenv('KPIERI_REPORT_DIR', 'reports')

    @classmethod
    def validate_config(cls):
        """Validate configuration values"""
        errors = []

        if cls.LAMBDA_BOX < 0:
            errors.append("KPIERI_LAMBDA_BOX must be nonnegative")

        if cls.MU_BOX < 0:
            errors.append("KPIERI_MU_BOX must be nonnegative")

        if cls.MAX_PATHS < 1:
            errors.append("KPIERI_MAX_PATHS must be positive")

        if cls.JOBS < 1:
            errors.append("KPIERI_JOBS must be at least 1")

        if cls.MAX_RANK < 1:
            errors.append("KPIERI_MAX_RANK must be between 1 and 4")

        if cls.OUTPUT_FORMAT not in OUTPUT_FORMATS:
            errors.append(f"KPIERI_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}")

        if not isinstance(logging.getLevelName(cls.LOG_LEVEL), int):
            errors.append(f"KPIERI_LOG_LEVEL {cls.LOG_LEVEL!r} is not a logging level")

        if errors:
            return False, errors
        return True, []


# Usage example
if __name__ == "__main__":
    valid, errors = Config.validate_config()
    if not valid:
        print("Configuration errors:")
        for error in errors:
            print(f"  - {error}")
    else:
        print("Configuration is valid")
