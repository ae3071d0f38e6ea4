from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install: the package falls back to _kernels_py at import.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("pteseq._kernels", ["src/pteseq/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
