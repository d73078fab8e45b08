"""Builds the optional compiled kernels when Cython is available."""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/arspace/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
