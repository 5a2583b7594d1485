# This file marks the qmod source directory as a package.

from .__version__ import __version__, __version_info__

__all__ = ["__version__", "__version_info__"]
