"""REST service shell: FastAPI app, persistence stores, configuration."""

from combine.service.app import create_app
from combine.service.config import ConfigError, ServerConfig

__all__ = ["ConfigError", "ServerConfig", "create_app"]
