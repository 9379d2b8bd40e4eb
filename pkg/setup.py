"""Build script: compiles the optional Cython kernel.

The extension is a pure speedup; if Cython or a C compiler is missing the
package installs anyway and falls back to the Python kernel at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("coxhecke._speedups", ["src/coxhecke/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
