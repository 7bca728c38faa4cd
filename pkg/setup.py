import numpy  # noqa: F401  (kept importable for build environments that pin includes)
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "framekit._kernels_c",
                sources=["src/framekit/_kernels_c.pyx"],
                # No -ffast-math: reassociation would defeat compensated summation.
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
