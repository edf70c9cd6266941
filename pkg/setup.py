import os

from setuptools import Extension, setup

# The compiled kernel is optional: set NSG_NO_EXT=1 (or build without a C
# toolchain) and the package falls back to the pure-Python kernel at import.
ext_modules = []
if os.environ.get("NSG_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "nsg._explore_cy",
                    ["src/nsg/_explore_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
