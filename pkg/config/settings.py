"""
Global settings for the group decomposition toolkit.
Loads environment variables and provides configuration access.
"""

import os
from pathlib import Path
from dataclasses import dataclass, field
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
CONFIG_DIR = PROJECT_ROOT / "config"
DATA_DIR = PROJECT_ROOT / "data"
TABLES_DIR = DATA_DIR / "tables"
OUTPUT_DIR = Path(os.getenv("GD_OUTPUT_DIR", str(DATA_DIR / "output")))
SCHEMAS_DIR = PROJECT_ROOT / "schemas"


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value else default


def _env_float(name: str, default: float) -> float:
    value = os.getenv(name)
    return float(value) if value else default


@dataclass
class GroupSettings:
    """Group construction and validation settings."""
    dense_table_limit: int = field(default_factory=lambda: _env_int("GD_DENSE_TABLE_LIMIT", 16384))
    exhaustive_associativity_limit: int = 256
    associativity_sample_factor: int = 10
    associativity_batch_size: int = 1 << 22
    symmetric_max_degree: int = 10
    symmetric_dense_max_degree: int = 7


@dataclass
class ThetaSettings:
    """Root finder settings for the theta invariant."""
    max_iterations: int = field(default_factory=lambda: _env_int("GD_THETA_MAX_ITERATIONS", 60))
    bracket_tolerance: float = field(default_factory=lambda: _env_float("GD_THETA_BRACKET_TOL", 1e-12))
    residual_tolerance: float = field(default_factory=lambda: _env_float("GD_THETA_RESIDUAL_TOL", 1e-10))
    precise_digits: int = 50


@dataclass
class SuenSettings:
    """Correlation bound settings."""
    pair_bound_max_order: int = 1024


@dataclass
class OracleSettings:
    """Caps for exhaustive enumeration."""
    single_mean_max_order: int = 512
    pair_mean_max_order: int = 128
    max_outcomes: int = field(default_factory=lambda: _env_int("GD_ORACLE_MAX_OUTCOMES", 10**8))


@dataclass
class MonteCarloSettings:
    """Simulation settings."""
    workers: int = field(default_factory=lambda: _env_int("GD_WORKERS", os.cpu_count() or 1))
    default_trials: int = 400
    trials_per_task: int = 64
    confidence_z: float = 1.96
    separation_sigmas: float = 3.0
    window_trial_factor: int = 4


@dataclass
class LoggingSettings:
    """Logging settings."""
    level: str = field(default_factory=lambda: os.getenv("GD_LOG_LEVEL", "INFO"))
    log_file: Optional[str] = field(default_factory=lambda: os.getenv("GD_LOG_FILE"))


@dataclass
class Settings:
    """Main settings container."""
    groups: GroupSettings = field(default_factory=GroupSettings)
    theta: ThetaSettings = field(default_factory=ThetaSettings)
    suen: SuenSettings = field(default_factory=SuenSettings)
    oracle: OracleSettings = field(default_factory=OracleSettings)
    montecarlo: MonteCarloSettings = field(default_factory=MonteCarloSettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    # Paths
    project_root: Path = PROJECT_ROOT
    data_dir: Path = DATA_DIR
    tables_dir: Path = TABLES_DIR
    output_dir: Path = OUTPUT_DIR
    schemas_dir: Path = SCHEMAS_DIR

    def ensure_directories(self):
        """Create necessary directories if they don't exist."""
        for dir_path in [self.data_dir, self.tables_dir, self.output_dir]:
            dir_path.mkdir(parents=True, exist_ok=True)


# Global settings instance
settings = Settings()
