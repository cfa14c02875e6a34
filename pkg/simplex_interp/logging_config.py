# simplex_interp/logging_config.py
import logging
from pathlib import Path
from logging.handlers import TimedRotatingFileHandler

from simplex_interp.core.config import get_settings

settings = get_settings()

LOG_LEVEL = settings.LOG_LEVEL           # DEBUG para diagnóstico de condicionamiento
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def setup_logging(level: str = LOG_LEVEL, log_to_file: bool = settings.LOG_TO_FILE) -> None:
    """
    Configura el logging de la aplicación: consola (stderr) y archivo con rotación diaria.

    Args:
        level: Nivel para la consola ("DEBUG", "INFO", "WARNING"...)
        log_to_file: Si True, agrega el archivo rotativo en LOG_DIR
    """
    handlers = [logging.StreamHandler()]                         # consola (stderr)

    if log_to_file:
        logs_dir = Path(settings.LOG_DIR)
        logs_dir.mkdir(parents=True, exist_ok=True)
        # Archivo con rotación diaria y retención de 30 días
        handlers.append(
            TimedRotatingFileHandler(logs_dir / "simplex_interp.log", when="midnight", interval=1, backupCount=30, encoding='utf-8')
        )

    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,    # sobreescribe cualquier configuración previa
    )
