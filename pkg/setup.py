# -*- coding: utf-8 -*-

from setuptools import setup, find_packages


with open('README.rst') as f:
    readme = f.read()

with open('requirements.txt') as f:
    requirements = [line.strip() for line in f
                    if line.strip() and not line.startswith(('#', 'scipy'))]

setup(
    name='seplas',
    version='0.1.0',
    description='Longest alternating subsequences of random separable permutations',
    long_description=readme,
    author='Joseph Wegner',
    author_email='joe@jwegner.io',
    license='GPLv3',
    packages=find_packages(exclude=('tests', 'docs')),
    install_requires=requirements,
    extras_require={'test': ['scipy~=1.10']},
    entry_points={
        'console_scripts': ['seplas=seplas.__main__:main'],
    },
    keywords='separable permutation Schroder alternating subsequence generating function',
)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
