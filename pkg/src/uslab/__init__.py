"""Exact computations in the localized enveloping algebra of sl(n+1), its
W-algebra factor, and the modules built from them."""
from uslab.kernel import IMPLEMENTATION

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memo table: straightening, W-algebra data, polynomial shifts."""
    from uslab import pbw, walgebra
    from uslab.lab import vectors

    pbw.clear_kernel_caches()
    walgebra.w_algebra.cache_clear()
    vectors._mono_shift.cache_clear()


__all__ = ["IMPLEMENTATION", "__version__", "clear_caches"]
