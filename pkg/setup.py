"""Build glue: compile the normalization kernel when Cython is available.

The package is fully functional without the extension (goeritz2.kernel falls
back to the pure-Python implementation), so any build failure here downgrades
to a pure install instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/goeritz2/_kernel.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # noqa: BLE001
    print(f"goeritz2: building without the compiled kernel ({exc})")

setup(ext_modules=ext_modules)
