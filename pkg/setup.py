"""Build script.

The simulator hot loop ships as an optional Cython extension
(sigmastar._stepper_c).  If Cython or a C compiler is unavailable the
build falls through and the package runs on the pure-Python stepper
(sigmastar._stepper_pure) selected at import time.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible; never fail the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: skipping C stepper build ({exc}); "
                  "falling back to pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "falling back to pure Python")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not installed; building without the C stepper")
        return []
    return cythonize(
        ["src/sigmastar/_stepper_c.pyx"],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
