from .compensated import NeumaierSum
from .quadrature import adaptive_quad

__all__ = [
    "NeumaierSum",
    "adaptive_quad",
]
