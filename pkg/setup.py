"""Build script for the compiled normal-ordering kernel.

The extension is optional: when Cython or a C compiler is missing the
package installs without it and falls back to the pure-Python kernel.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("LIEEMBED_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("lieembed.algebra._kernel", ["src/lieembed/algebra/_kernel.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3", "boundscheck": False,
                                 "wraparound": False},
        )

setup(ext_modules=ext_modules)
