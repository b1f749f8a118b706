"""Select the straightening kernel: compiled extension if importable, else
the pure-Python fallback.  Set ``USLAB_PURE_PYTHON=1`` to force the fallback."""
import os

from uslab._kernel_py import Kernel as PyKernel
from uslab._kernel_py import StraighteningError

CKernel = None
if not os.environ.get("USLAB_PURE_PYTHON"):
    try:
        from uslab._kernel import Kernel as CKernel
    except ImportError:
        CKernel = None

Kernel = CKernel if CKernel is not None else PyKernel
IMPLEMENTATION = Kernel.implementation

__all__ = ["Kernel", "PyKernel", "CKernel", "IMPLEMENTATION", "StraighteningError"]
