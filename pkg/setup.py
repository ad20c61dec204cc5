"""Build script: compiles the optional enumeration kernel.

The package works without the extension (a pure-Python search is selected
at import time), so a failed compile only costs speed.
"""

from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print("warning: extension build failed (%s); using pure Python" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("warning: %s failed to compile (%s)" % (ext.name, exc))


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("pizzatlas._enumcore", ["src/pizzatlas/_enumcore.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
