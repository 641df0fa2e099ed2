from setuptools import find_packages, setup

setup(
    name='asymlab',
    version='1.0.0',
    package_dir={'': '.'},
    packages=find_packages(where='.', exclude=['tests', 'tests.*']),
    package_data={
        '': ['*.yml'],
        '**': ['*.yml'],
    },
    entry_points={
        'console_scripts': ['asymlab = asymlab.__main__:main'],
    },
    install_requires=[
        "numpy>=1.20.2",
        "PyYAML>=5.4.1",
        "beautifultable>=1.0.1",
        "click>=8.0.1",
        "loguru>=0.5.3",
        "networkx>=2.6",
        "mpmath>=1.2.1",
        "sympy>=1.8",
    ]
)
