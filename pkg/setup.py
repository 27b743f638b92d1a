"""Build hook: compiles the optional histogram kernel when Cython is present.

The package works without the extension; rectchar.kernel falls back to the
pure-Python implementation at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("rectchar._cykernel", ["src/rectchar/_cykernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
