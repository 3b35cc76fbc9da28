import numpy
from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off keeps the compiled kernel bit-compatible with the
# pure-python backend (no FMA contraction of a*b+c).
setup(
    ext_modules=cythonize(
        [
            Extension(
                "weno7._reconstruct",
                ["src/weno7/_reconstruct.pyx"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
)
