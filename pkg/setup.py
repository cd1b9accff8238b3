from setuptools import setup, find_packages

setup(
    name='qgestalt',
    version='0.1.0',
    description='Quantum-inspired Gestalt recognition: density-operator centroids, fidelity similarity '
                'and three-valued classification of data and musical themes',
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'qgestalt.music': ['themes/*.theme']},
    install_requires=[
        'numpy>=1.24',
        'pandas>=1.5',
    ],
    entry_points={
        'console_scripts': ['qgestalt=qgestalt.cli:run'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11'
    ],
)
