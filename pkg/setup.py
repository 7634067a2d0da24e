# -*- coding: utf-8 -*-

from os import path
import pkg_resources
from setuptools import setup, find_namespace_packages

VERSION = '0.1.0'

with open('README.md') as f:
    readme = f.read()

install_requires = []
with open(path.abspath("requirements.txt"), "r") as f:
    requirements_txt = f.readlines()
    install_requires = [
        str(requirement)
        for requirement
        in pkg_resources.parse_requirements(requirements_txt)
    ]

setup(
    name='latticebox',
    version=VERSION,
    description='Latticebox - exact h*-vectors and box-point generating functions of lattice polytopes',
    long_description=readme,
    long_description_content_type='text/markdown',
    install_requires=install_requires,
    packages=find_namespace_packages(include=['latticebox', 'latticebox.*'], exclude=('tests', 'docs')),
    package_data={'latticebox': ['fixtures/*.yml']},
    entry_points = {
        'console_scripts': [
            'latticebox=latticebox.__main__:main',
        ],
    },
)
