from setuptools import Extension, setup

# The compiled kernel is an optional speedup: without Cython (or a working
# compiler) the package installs pure and falls back to the numpy kernel.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gapkeywords._kernel", ["src/gapkeywords/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
