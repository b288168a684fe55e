"""Build script: compiles the optional C extension holding the hot kernels.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a failed compile only costs speed.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures; the pure-Python fallback takes over."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            print(f"wordbinom: skipping compiled kernels ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"wordbinom: failed to build {ext.name} ({exc})", file=sys.stderr)


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("wordbinom._kernels", ["src/wordbinom/_kernels.pyx"])],
        language_level=3,
    )
except ImportError as exc:
    print(f"wordbinom: Cython unavailable, building without kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
