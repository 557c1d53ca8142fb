from .bracket import BracketState, bracket, jones, skein_check, skein_triple
from .kauffman import KauffmanEngine, kauffman_F, kauffman_lambda, q_polynomial

__all__ = [
    "BracketState",
    "KauffmanEngine",
    "bracket",
    "jones",
    "kauffman_F",
    "kauffman_lambda",
    "q_polynomial",
    "skein_check",
    "skein_triple",
]
