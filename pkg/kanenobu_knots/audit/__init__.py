from .result_cache import ResultCache, cache_key, default_cache

__all__ = ["ResultCache", "cache_key", "default_cache"]
