import os
from setuptools import setup, find_packages

# Version, requirements and the console script live in leodyn/version.py
ver_file = os.path.join('leodyn', 'version.py')
with open(ver_file) as f:
    exec(f.read())

opts = dict(name=NAME,
            maintainer=MAINTAINER,
            description=DESCRIPTION,
            long_description=LONG_DESCRIPTION,
            license=LICENSE,
            classifiers=CLASSIFIERS,
            author=AUTHOR,
            platforms=PLATFORMS,
            version=VERSION,
            packages=find_packages(),
            package_data=PACKAGE_DATA,
            entry_points=ENTRY_POINTS,
            python_requires=PYTHON_REQUIRES,
            install_requires=REQUIRES,
            extras_require=EXTRAS_REQUIRE,
            test_suite='leodyn.tests')


if __name__ == '__main__':
    setup(**opts)
