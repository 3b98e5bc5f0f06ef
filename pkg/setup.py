"""Build the optional compiled kernel extension.

If Cython (or a C compiler) is unavailable the install still succeeds;
the package falls back to the pure-Python kernels at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/jordankit/_kernels/fast.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
