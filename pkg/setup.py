"""Build hook: compile the optional Cython kernel when possible.

The package is fully functional without the extension (the pure-Python
kernel has the identical API), so any failure to cythonize or compile
degrades to a pure-Python install instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/gradedq/_kernel_c.pyx"],
        language_level=3,
    )
except Exception as exc:  # noqa: BLE001 - degrade to pure Python on any build issue
    print(f"gradedq: building without the compiled kernel ({exc})")

setup(ext_modules=ext_modules)
