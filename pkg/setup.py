import os

from setuptools import setup

ext_modules = []
if os.environ.get("LOCALGW_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("localgw._polycore_cy", ["src/localgw/_polycore_cy.pyx"])],
            language_level=3,
        )
    except Exception:
        # Pure-Python kernel is always available; the extension is an
        # optional accelerator.
        ext_modules = []

setup(ext_modules=ext_modules)
