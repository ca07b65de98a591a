from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install: phinmod._backend falls back to the interpreted
    # kernels when the extension is absent.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("phinmod._kernels", ["src/phinmod/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
