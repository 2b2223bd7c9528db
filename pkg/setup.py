import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("ISOINVERSE_PURE"):
    ext = Extension(
        "isoinverse._kernels._fast",
        ["src/isoinverse/_kernels/_fast.pyx"],
        include_dirs=[np.get_include()],
        library_dirs=[os.path.join(os.path.dirname(np.__file__), "random", "lib")],
        libraries=["npyrandom"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
