from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "longseg._longseg",
    sources=[
        "bindings/longseg_py.cpp",
        "src/int128.cpp",
        "src/rational.cpp",
        "src/score_sequence.cpp",
        "src/oracle.cpp",
        "src/bio.cpp",
        "src/bench.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(
    packages=["longseg"],
    package_dir={"longseg": "python/longseg"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
