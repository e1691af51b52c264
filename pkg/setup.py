"""Build script: compiles the embedding kernel when Cython is available.

The package works without the compiled extension; `bergeturan.engine`
falls back to the pure-Python kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("bergeturan._engine_cy", ["src/bergeturan/_engine_cy.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
