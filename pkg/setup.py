"""Build script for the optional compiled enumeration kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); the kernel only accelerates the
tuple-enumeration inner loop.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "galcover._enum_cy",
                ["src/galcover/_enum_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
