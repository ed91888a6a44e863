"""Build the optional compiled kernel; the package works without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/unitwreath/_kernels.pyx"], language_level=3
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
