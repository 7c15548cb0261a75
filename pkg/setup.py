import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "lapreg._kernels._cykernels",
                ["src/lapreg/_kernels/_cykernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    # No Cython at build time: the package still works through the
    # pure-numpy kernel backend selected at import.
    ext_modules = []

setup(ext_modules=ext_modules)
