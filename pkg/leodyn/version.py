from os.path import join as pjoin

# Format expected by setup.py and doc/conf.py: string of form "X.Y.Z"
_version_major = 0
_version_minor = 1
_version_micro = ''  # use '' for first of series, number for 1 and above
_version_extra = 'dev'
# _version_extra = ''  # Uncomment this for full releases

# Construct full version string from these.
_ver = [_version_major, _version_minor]
if _version_micro:
    _ver.append(_version_micro)
if _version_extra:
    _ver.append(_version_extra)

__version__ = '.'.join(map(str, _ver))

CLASSIFIERS = ["Development Status :: 3 - Alpha",
               "Environment :: Console",
               "Intended Audience :: Science/Research",
               "License :: OSI Approved :: MIT License",
               "Operating System :: OS Independent",
               "Programming Language :: Python",
               "Programming Language :: Python :: 3",
               "Topic :: Scientific/Engineering :: Mathematics"]

# Description should be a one-liner:
description = "leodyn: exact checks for locally eventually onto maps and specification"
# Long description will go up on the pypi page
long_description = """

leodyn
======
leodyn turns the notions around locally eventually onto (LEO) maps
into exact, testable procedures. Piecewise-affine maps of the interval
and the circle are iterated in rational arithmetic, so that

* LEO covering times f^N(J) = [0, 1),
* Bowen balls and their images,
* expanding and expansivity checks

are decided exactly instead of being sampled.

Shift spaces (subshifts of finite type and truncated countable-graph
shifts) come with cylinder-set regions, primitivity indices and
separated-set counts. A single shadowing solver finds, for any N-spaced
specification, a point whose orbit follows every segment, and a
periodic one when asked.

The worked examples (the replicated f0 map, the map with an invariant
domain, the Cantor set of the doubling map, the Rome-graph coding, the
zero-suppression of the Thue-Morse shift and the beta-shifts) each have
a generator and a verifier, and are reachable from the ``leodyn``
command line.

License
=======
``leodyn`` is licensed under the terms of the MIT license.
"""

NAME = "leodyn"
MAINTAINER = "leodyn developers"
DESCRIPTION = description
LONG_DESCRIPTION = long_description
LICENSE = "MIT"
AUTHOR = "leodyn developers"
PLATFORMS = "OS Independent"
MAJOR = _version_major
MINOR = _version_minor
MICRO = _version_micro
VERSION = __version__
PACKAGE_DATA = {'leodyn': [pjoin('tests', 'data', '*.json')]}
REQUIRES = ["numpy", "scipy", "pandas>=1.5", "mpmath", "matplotlib", "seaborn"]
ENTRY_POINTS = {'console_scripts': ['leodyn=leodyn.cli:main']}
PYTHON_REQUIRES = '>=3.8'
# the sphinx gallery runs the scripts in tutorials/
EXTRAS_REQUIRE = {'doc': ['sphinx', 'numpydoc', 'sphinx-gallery', 'sphinx-rtd-theme']}
