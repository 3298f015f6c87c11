from .settings import Settings, ValidationSettings

__all__ = ["Settings", "ValidationSettings"]
