import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the accelerator if a toolchain is present, otherwise skip it.

    The package is fully functional on the pure-Python kernel; the import
    shim in chromalg.rewrite falls back automatically.
    """

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, missing headers, ...
            print(f"warning: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})")


extensions = [
    Extension("chromalg._reduce_cy", ["src/chromalg/_reduce_cy.pyx"]),
]

if os.environ.get("CHROMALG_NO_EXT"):
    extensions = []
else:
    from Cython.Build import cythonize

    extensions = cythonize(
        extensions,
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(
    ext_modules=extensions,
    cmdclass={"build_ext": optional_build_ext},
)
