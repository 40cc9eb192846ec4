"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is
selected at import time), so compilation failures are non-fatal.
Set EXPDIST_PURE_PYTHON=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("EXPDIST_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "expdist._kernels_c",
                    ["src/expdist/_kernels_c.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
