import os, json, hashlib, logging, tempfile
from typing import Any, Optional

from kanenobu_knots.config import settings

logger = logging.getLogger(__name__)


def cache_key(invariant: str, diagram_key: Any, version: str = None) -> str:
    """Stable file stem for (engine version, canonical diagram encoding, invariant)."""
    version = version or settings.ENGINE_VERSION
    raw = json.dumps([version, invariant, repr(diagram_key)], ensure_ascii=False)
    return f"{invariant}_{hashlib.sha256(raw.encode('utf-8')).hexdigest()[:32]}"


class ResultCache:
    """One JSON file per key; writes go to a temp file first, then os.replace."""

    def __init__(self, directory: Optional[str]):
        self.directory = directory
        if directory:
            os.makedirs(directory, exist_ok=True)

    @property
    def enabled(self) -> bool:
        return bool(self.directory)

    def _path(self, key: str) -> str:
        return os.path.join(self.directory, f"{key}.json")

    def load(self, key: str) -> Optional[Any]:
        if not self.enabled:
            return None
        path = self._path(key)
        if not os.path.exists(path):
            logger.debug("cache miss %s", key)
            return None
        with open(path, "r", encoding="utf-8") as f:
            value = json.load(f)
        logger.debug("cache hit %s", key)
        return value

    def save(self, key: str, value: Any) -> Optional[str]:
        if not self.enabled:
            return None
        path = self._path(key)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp_", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(value, f, ensure_ascii=False, indent=2)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise
        return path

    def get_or_compute(self, key: str, compute):
        cached = self.load(key)
        if cached is not None:
            return cached
        value = compute()
        self.save(key, value)
        return value


def default_cache(enabled: bool = True) -> ResultCache:
    return ResultCache(settings.CACHE_DIR if enabled else None)
