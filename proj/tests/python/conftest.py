import os
import sys

# Wire up the CMake-built extension and the source package for development
# runs; installed wheels need neither variable.
for var in ("ICX_MODULE_DIR", "ICX_PACKAGE_DIR"):
    path = os.environ.get(var)
    if path and path not in sys.path:
        sys.path.insert(0, path)
