# from distutils.core import setup
from setuptools import setup, find_packages
import os

# Note: Make sure to use `pip -v` when pip-installing, so you can check what is being installed.

# Note: The fixture JSON files under tcox/cox/fixtures are package data; they are needed by
# `tcox catalog` at runtime, so `package_data` below must list them.
PROJECT_ROOT_DIR = os.path.abspath(os.path.dirname(__file__))

# Get the long description from the README file

try:
    with open(os.path.join(PROJECT_ROOT_DIR, 'README.md'), encoding='utf-8') as f:
        long_description = f.read()
except IOError:
    long_description = """
tcox: Cox rings of varieties with a complexity-one torus action.

Generators, class-group degrees and trinomial relations from divisorial fans over P^1,
Orlik-Wagreich graphs of K*-surfaces, and Klyachko filtrations of rank-2 toric bundles.

See `README.md` for usage.

"""


# Distribution build and release:
#   python setup.py sdist
#   python setup.py bdist_wheel
#   twine upload dist/*
setup(
    name='tcox',
    version='2026.10.16',  # remember to also update __init__.py
    packages=find_packages(exclude=['tests', 'tests.*']),  # Packages to include in the source dist.
    package_data={'tcox.cox': ['fixtures/*.json']},
    license='GNU General Public License v3 (GPLv3)',
    author='tcox developers',
    description='Cox rings of varieties with a complexity-one torus action: '
                'divisorial fans, Orlik-Wagreich graphs and Klyachko filtrations.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords=['Cox ring', 'torus action', 'complexity one', 'toric geometry', 'algebraic geometry', 'CLI'],
    entry_points={
        'console_scripts': [
            # Main CLI (click group):
            'tcox=tcox.cox.cli:tcox_cli',

            # Config CLI:
            'tcox-config=tcox.cox.config_cli:tcox_config_cli',
        ],
    },
    # pip will install these modules as requirements.
    install_requires=[
        'numpy',            # Object-dtype integer matrices for Hermite/Smith normal forms.
        'pycddlib>=2.1,<3', # Exact double description: H/V conversion, redundancy removal.
        'sympy',            # Relation parsing, exact ranks and determinants.
        'pyyaml',           # Config loading.
        'click',            # CLI package.
    ],
    python_requires='>=3.7',  # Dataclasses, f-strings,
    classifiers=[
        # How mature is this project? Common values are
        #   3 - Alpha
        #   4 - Beta
        #   5 - Production/Stable
        'Development Status :: 4 - Beta',

        # Indicate who your project is intended for
        'Intended Audience :: Science/Research',
        # 'Intended Audience :: Developers',
        # 'Intended Audience :: Education',

        'Topic :: Scientific/Engineering :: Mathematics',

        # Pick your license as you wish (should match 'license' above)
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',

        # Specify the Python versions you support here.
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',

        'Operating System :: MacOS',
        'Operating System :: Microsoft',
        'Operating System :: POSIX :: Linux',
    ],
)
