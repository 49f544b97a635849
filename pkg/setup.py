#!/usr/bin/env python

from setuptools import setup

try:
    from pypandoc import convert
    read_md = lambda f: convert(f, 'rst', 'md')
except:
    print("Warning: pypandoc module not found, could not convert Markdown to "
          "RST.")
    read_md = lambda f: open(f, 'r').read()


setup(name="frh_toolbox",
      version="0.1.0",
      description="Mean value inversion of totally geodesic Radon "
      "transforms on Euclidean, hyperbolic and spherical spaces.",
      long_description=read_md("README.md"),
      classifiers=[
          "Programming Language :: Python :: 2.7",
          "Programming Language :: Python :: 3.6",
          "Development Status :: 3 - Alpha",
          "Topic :: Scientific/Engineering :: Mathematics",
          "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
      ],
      author="frh_toolbox developers",
      license="GPLv3",
      packages=["frh_toolbox"],
      package_data={"frh_toolbox": ["configs/*.ini"]},
      scripts=[
          "bin/frh_toolbox",
          "bin/frh_toolbox_tests",
          "bin/frh_demo",
      ],
      test_suite="nose.collector",
      tests_require=["nose"],
      install_requires=[
          "future",
          "numpy",
          "pandas",
          "scipy",
      ],
      include_package_data=True,
      zip_safe=False)
