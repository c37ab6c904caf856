from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="erws",
    version="0.1.0",
    author="erws Contributors",
    description="Exact moments, oracles and Monte Carlo ensembles for the perturbed elephant random walk with stops",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    install_requires=[
        "asgiref>=3.7.0",
        "pydantic>=2.0",
        "numpy>=1.26",
        "scipy>=1.11",
    ],
    entry_points={
        "console_scripts": [
            "erws=erws.cli.application:main",
        ],
    },
)
