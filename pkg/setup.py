#!/usr/bin/python3

from setuptools import setup, find_packages

with open("README.md", 'r') as f:
    long_description = f.read()

with open("requirements.txt", 'r') as f:
    requirements = [i.strip() for i in f.readlines()]

setup(
    name="wixtree",
    version="0.1.0",
    description=("Extremal Wiener index trees with a given degree sequence: "
                 "greedy constructions, exchange moves and exhaustive "
                 "verification."),
    license="GPLv2",
    keywords="Wiener index trees degree sequence greedy caterpillar Prufer",
    packages=find_packages(exclude=['wixtree.tests']),
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: GNU General Public License v2 (GPLv2)",
    ],
    install_requires=requirements,
    entry_points={
        'console_scripts': ['wix=wixtree.cli:main'],
    },
    python_requires='>=3.8',
)
