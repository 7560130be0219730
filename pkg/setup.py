"""Build script for the optional compiled kernel.

The package is pure Python; ``shadowcover.kernels._speedups`` is a compiled
twin of ``shadowcover.kernels.pure`` built here when Cython and a C compiler
are available.  The extension is marked optional so a failed build degrades
to the pure-Python backend instead of failing the install.
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
                "shadowcover.kernels._speedups",
                ["src/shadowcover/kernels/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
