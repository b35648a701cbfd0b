"""Build script: compiles the hot simulation/rollout kernel to a C extension.

The kernel source (src/hrl_lab/_kernel.py) is plain Python written in
Cython pure-Python mode, so the same file runs interpreted when the
extension cannot be built.  The compiled variant is installed under the
separate module name ``hrl_lab._kernel_c`` and picked up at import time by
``hrl_lab.backend``; if compilation fails the package still installs and
falls back to the interpreted kernel.

-ffp-contract=off keeps the compiled arithmetic bit-identical to the
interpreted kernel (no fused multiply-add contraction).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "hrl_lab._kernel_c",
                ["src/hrl_lab/_kernel.py"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        language_level=3,
        annotate=False,
    )

setup(ext_modules=ext_modules)
