import pathlib
import sys

# allow running pytest from a fresh checkout without installing the package
_src = pathlib.Path(__file__).resolve().parent.parent / "src"
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))
