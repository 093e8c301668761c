from setuptools import setup, find_packages

setup(name='mirtoolkit',
      version='0.1',
      description='Exact coadjoint orbits of the mirabolic group toolkit',
      license='GNU GPLv3',
      packages=find_packages(exclude=['tests']),
      install_requires=[
          'argparse',
          'six',
          'numpy>=1.20',
          'pandas>=0.25.3',
          'sympy>=1.12'
      ],
      extras_require={
          'test': ['pytest']
      },
      entry_points={
          'console_scripts': ['mirtoolkit=mirtoolkit.cli:main']
      },
      zip_safe=False)
