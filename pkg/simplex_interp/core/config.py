from functools import lru_cache
from pathlib import Path
from dotenv import load_dotenv
import os

load_dotenv(Path(__file__).resolve().parents[2] / ".env")


def _as_bool(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


class Settings:
    # Precisión numérica
    PRECISION_BITS: int = int(os.getenv("SIMPLEX_INTERP_PRECISION_BITS", "256"))
    DIGITS: int = int(os.getenv("SIMPLEX_INTERP_DIGITS", "15"))

    # Optimización (búsqueda multi-arranque)
    STARTS: int = int(os.getenv("SIMPLEX_INTERP_STARTS", "64"))
    MAX_ITERS: int = int(os.getenv("SIMPLEX_INTERP_MAX_ITERS", "2000"))
    TOL: float = float(os.getenv("SIMPLEX_INTERP_TOL", "1e-10"))
    SEED: int = int(os.getenv("SIMPLEX_INTERP_SEED", "0"))
    WORKERS: int = int(os.getenv("SIMPLEX_INTERP_WORKERS", "1"))

    # Logging
    LOG_LEVEL: str = os.getenv("SIMPLEX_INTERP_LOG_LEVEL", "INFO")
    LOG_DIR: str = os.getenv("SIMPLEX_INTERP_LOG_DIR", str(Path(__file__).resolve().parents[2] / "logs"))
    LOG_TO_FILE: bool = _as_bool(os.getenv("SIMPLEX_INTERP_LOG_TO_FILE", "true"))

    ARTIFACT_VERSION: str = "1.0.0"


@lru_cache
def get_settings() -> Settings:
    return Settings()
