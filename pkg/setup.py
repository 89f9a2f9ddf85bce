"""Build script: compiles the clause kernels when Cython is available.

The package works without the extension; atmod.kernels falls back to
the pure-Python implementation at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(["src/atmod/_ckernels.pyx"])
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
