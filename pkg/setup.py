#!/usr/bin/env python
import os.path
from setuptools import setup

__version__ = "can't find version.py"
exec(compile(open('tauweave/version.py').read(), # pylint: disable=exec-used
                  'tauweave/version.py', 'exec'))

def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


setup(name='tauweave',
      version=__version__,
      description='Support tau-tilting posets of double line quivers and the weak order',
      packages=['tauweave'],
      license="MIT",
      keywords="tau-tilting, silting, weak order, symmetric group, preprojective algebra, quiver",
      long_description=read('README.rst'),
      classifiers=[
          "Development Status :: 4 - Beta",
          "License :: OSI Approved :: MIT License",
          "Programming Language :: Python :: 3",
          "Topic :: Scientific/Engineering :: Mathematics",
      ],
      python_requires=">=3.7",
      install_requires=[
          "numpy",
          "scipy",
          "sympy",
          "networkx",
      ],
      tests_require=[
          "pytest",
          "pandas"
      ],
      extras_require={
          # all console_script entry points require pandas, which writes
          # the g-vector tables.
          "TSV":  ["pandas"],
      },
      setup_requires=["pytest-runner"],
      entry_points={
          "console_scripts": [
              "tauweave = tauweave.application:main [TSV]",
              "tauweave.weak-order = tauweave.application:weak_order_cmd [TSV]",
              "tauweave.xi = tauweave.application:xi_cmd [TSV]",
              "tauweave.sttilt = tauweave.application:sttilt_cmd [TSV]",
              "tauweave.verify = tauweave.application:verify_cmd [TSV]",
          ],
      }
)
