import glob
import os
import sys

# The built extension lives in the cmake build tree; the pure package wraps it.
_here = os.path.dirname(os.path.abspath(__file__))
_module_dir = os.environ.get("ZONEKIT_MODULE_DIR")
if not _module_dir:
    _candidate = os.path.join(_here, os.pardir, os.pardir, "build")
    if glob.glob(os.path.join(_candidate, "_zonekit*")):
        _module_dir = _candidate
if _module_dir:
    sys.path.insert(0, _module_dir)
sys.path.insert(0, os.path.join(_here, os.pardir, os.pardir, "python"))
