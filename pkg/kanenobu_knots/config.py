# config.py
import os
from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


class Settings:
    ENGINE_VERSION = "1.0.0"
    CACHE_DIR = os.getenv("KANENOBU_CACHE") or None
    JONES_MAX_CROSSINGS = _int_env("KANENOBU_JONES_MAX_CROSSINGS", 20)
    KHOVANOV_MAX_CROSSINGS = _int_env("KANENOBU_KHOVANOV_MAX_CROSSINGS", 14)
    KAUFFMAN_MAX_CROSSINGS = _int_env("KANENOBU_KAUFFMAN_MAX_CROSSINGS", 14)
    LEE_MAX_CROSSINGS = _int_env("KANENOBU_LEE_MAX_CROSSINGS", 10)
    LOG_LEVEL = os.getenv("KANENOBU_LOG_LEVEL", "WARNING")
    WORKERS = _int_env("KANENOBU_WORKERS", 1)

    # CLI defaults (bracket/cube and skein)
    CLI_CUBE_CAP = 14
    CLI_SKEIN_CAP = 12


settings = Settings()
