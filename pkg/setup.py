"""Builds the optional compiled echelon kernel.

If Cython or a C++ compiler is missing the package still installs and runs on
the pure-Python kernel.
"""
import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print("warning: compiled kernel not built (%s); using pure Python" % exc, file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print("warning: failed to build %s (%s)" % (ext.name, exc), file=sys.stderr)


def extensions():
    if os.environ.get("ENBC_KIT_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "enbc_kit._echelon",
        ["src/enbc_kit/_echelon.pyx"],
        language="c++",
        extra_compile_args=["-O3", "-std=c++17"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"}, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
