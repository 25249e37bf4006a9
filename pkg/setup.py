from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "freetoeplitz._speedups",
                ["src/freetoeplitz/_speedups.pyx"],
            )
        ]
    )
except ImportError:
    # pure-Python fallback is selected at import time
    ext_modules = []

setup(ext_modules=ext_modules)
