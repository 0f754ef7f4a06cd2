from setuptools import setup, find_packages

setup(name='HomCat',
      version='0.9',
      description='Exact computation of 1,2-coloured HOMFLY-PT link homology of braid closures',
      #url='',
      #author='',
      #author_email='',
      license='MIT',
      packages=find_packages(include=['HomCat', 'HomCat.*']),
      install_requires=['numpy', 'pandas', 'matplotlib', 'sympy', 'python-flint'],
      extras_require={'test': ['pytest']},
      entry_points={'console_scripts': ['homcat=HomCat.cli:main']},
      zip_safe=False)
