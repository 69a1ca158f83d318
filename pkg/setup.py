"""Build hook for the optional compiled kernel.

The package is fully functional without the extension: condorcet._core falls
back to the pure-Python kernel when the compiled module is missing, so a
build environment without Cython or a C compiler still produces a working
install (just a slower one).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("condorcet._kernel", ["src/condorcet/_kernel.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
