import codecs
import os
import re

from setuptools import find_packages, setup

HERE = os.path.abspath(os.path.dirname(__file__))


def read(*parts):
    with codecs.open(os.path.join(HERE, *parts), 'rb', 'utf-8') as f:
        return f.read()


def find_version(*file_paths):
    version_file = read(*file_paths)
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]",
                              version_file, re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError('Unable to find version string')


install_requires = [
    'mpmath >= 1.1.0',
    'numpy >= 1.20',
    'scipy >= 1.6',
    'Twisted >= 21.2.0',
]

setup(
    name='fockarith',
    version=find_version('fockarith', '__init__.py'),
    license='MIT',
    description=('Operator-valued arithmetic functions on a truncated Fock '
                 'space, their Berezin symbols and radial limits'),
    long_description=read('README.rst'),
    packages=find_packages(),
    python_requires='>=3.9',
    install_requires=install_requires,
    extras_require={
        'test': [
            'fixtures',
            'pytest >= 6.0.0',
            'sympy >= 1.7',
            'testtools',
        ],
        'lint': [
            'flake8',
            'flake8-import-order',
        ],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Framework :: Twisted',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    entry_points={
        'console_scripts': ['fockarith = fockarith.cli:_main'],
    }
)
