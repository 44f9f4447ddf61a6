"""Numerical laboratory for moments of derivatives of CUE characteristic
polynomials and of the Riemann zeta function at its nontrivial zeros."""

import os
import sys

try:
    from ._zml import *  # noqa: F401,F403
    from ._zml import ARTIFACT_VERSION  # noqa: F401
except ImportError:
    # in-tree testing: the extension lives in the build directory named by
    # ZML_EXT_DIR rather than inside the package
    _ext_dir = os.environ.get("ZML_EXT_DIR")
    if not _ext_dir:
        raise
    sys.path.insert(0, _ext_dir)
    from _zml import *  # noqa: F401,F403
    from _zml import ARTIFACT_VERSION  # noqa: F401

__version__ = ARTIFACT_VERSION.split()[-1]
