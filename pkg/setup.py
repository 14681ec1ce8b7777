"""Build script for the optional compiled trace kernel.

The package is pure Python except for one hot loop: the weighted trace of
the braid-group representation, whose cost grows exponentially in strand
count. If Cython and a C compiler are available the kernel is compiled;
otherwise installation proceeds and the equivalent pure-Python kernel is
used at runtime.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cryptocomb._kernel._fast",
                ["src/cryptocomb/_kernel/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
