from strictdom.spaces.space import Space
from strictdom.spaces.simplex import Simplex

__all__ = ["Space", "Simplex"]
