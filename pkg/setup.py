"""Build script: compiles the GF(p) kernel extension when Cython and a C
compiler are available, and falls back to the pure-Python kernels otherwise.
The installed package works identically either way (see hyptorsion.kernels)."""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Degrade gracefully to the pure-Python kernels if compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any toolchain failure
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: skipping {ext.name} ({exc})")


ext_modules = []
if not os.environ.get("HYPTORSION_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hyptorsion/_kernel.pyx"],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
