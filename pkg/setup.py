from setuptools import setup, find_packages
import sys, os.path

# Don't import strictdom module here, since deps may not be installed
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'strictdom'))
from version import VERSION

extras = {
  'test': ['pytest', 'scipy', 'pycddlib<3'],
}

setup(name='strictdom',
      version=VERSION,
      description='Exact strict dominance, support reduction and rationalizability for two-player games.',
      author='strictdom developers',
      license='MIT',
      packages=[package for package in find_packages()
                if package.startswith('strictdom')],
      zip_safe=False,
      install_requires=[
          'numpy>=1.10.4',
      ],
      extras_require=extras,
      package_data={'strictdom': [
        'instances/tests/golden.json']
      },
      scripts=['bin/strictdom'],
      tests_require=['pytest', 'scipy', 'pycddlib<3'],
      python_requires='>=3.7',
      classifiers=[
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: 3.7',
          'Programming Language :: Python :: 3.8',
      ],
)
