"""Exact q-series for Gromov-Witten counts on elliptic surfaces and K3."""
from .qseries import Series, NotInvertibleError, OrderMismatchError

__version__ = "0.1.0"

__all__ = ["Series", "NotInvertibleError", "OrderMismatchError", "__version__"]
