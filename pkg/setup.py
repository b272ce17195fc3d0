from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("maxsub._cykernel", ["src/maxsub/_cykernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Without Cython the package still installs; the pure-Python kernel
    # is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
