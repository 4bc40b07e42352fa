from setuptools import setup

with open("requirements.txt", encoding="utf-8") as f:
    REQUIRED = f.read().splitlines()

with open("README.md", "r", encoding="utf-8") as fh:
    LONG_DESCRIPTION = fh.read()

with open("VERSION", "r", encoding="utf-8") as fh:
    VERSION = fh.read().strip()
setup(
    version=VERSION,
    name="postulatum",
    packages=[
        "postulatum",
        "postulatum._geom",
        "postulatum._square",
        "postulatum._cli_modules",
    ],
    description="Exact parallel postulate classification in mixed geometries",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    license="Apache License 2.0",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: POSIX :: Linux",
        "Operating System :: MacOS :: MacOS X ",
    ],
    scripts=["bin/postulatum"],
    keywords=[
        "geometry",
        "parallel postulate",
        "non-euclidean",
        "exact arithmetic",
        "postulatum",
    ],
    python_requires=">=3.8",
    install_requires=REQUIRED,
    test_suite="tests",
    tests_require=["mock", "hypothesis"],
    include_package_data=True,
)
