"""Build the optional compiled kernel.

The package works without a C toolchain: if Cython or the compiler is
unavailable the extension is skipped and the pure-Python kernels are used.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qdivisible._kernels_c", ["src/qdivisible/_kernels_c.pyx"])],
        compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
