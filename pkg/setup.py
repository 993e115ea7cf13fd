"""Build hook for the optional compiled term kernel.

The package works without a compiler: wblow.kernel falls back to the pure
Python implementation when the extension is absent.  Building in an
environment without Cython therefore must not fail.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("wblow._kernel_cy", ["src/wblow/_kernel_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
