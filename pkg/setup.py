"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "lexigrow._kernels",
                ["src/lexigrow/_kernels.pyx"],
                language="c++",
                extra_compile_args=["-O3", "-fopenmp"],
                extra_link_args=["-fopenmp"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
