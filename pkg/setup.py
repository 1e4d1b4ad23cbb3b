"""Build script for the optional compiled backtracking kernel.

The package is pure Python except for kmagic._backtrack, a Cython
translation of the kernel in kmagic._backtrack_py.  If Cython or a C
compiler is unavailable the extension is skipped and the package falls
back to the pure implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/kmagic/_backtrack.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
