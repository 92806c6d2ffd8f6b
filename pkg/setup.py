import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # building from an sdist without Cython: ship the fallback only
    cythonize = None

extensions = []
if cythonize is not None and not os.environ.get("ABCDEPTH_NO_EXT"):
    extensions = cythonize(
        [
            Extension(
                "abcdepth._kernels",
                ["src/abcdepth/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
