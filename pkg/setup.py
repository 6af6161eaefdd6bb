from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install; raowqo._kernel falls back to the Python twin.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("raowqo._enum_cy", ["src/raowqo/_enum_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
