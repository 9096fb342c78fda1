"""Build script for the optional compiled kernel extension.

If no C compiler is available the install still succeeds and the package
falls back to the NumPy kernels at import time.
"""

from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "islands.kernels._native",
        sources=["src/islands/kernels/_native.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    ),
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
