"""Build script for the compiled kernel extension.

The package works without the extension (a pure-Python twin of every kernel
ships in relbound._kernels_py); building it just makes the hot loops fast.
"""
import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "relbound._kernels",
        sources=["src/relbound/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
