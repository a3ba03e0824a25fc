from setuptools import setup, find_packages

# Open the README file
with open('readme.md', 'r') as f:
    long_description = f.read()

# Open the requirements file
with open('requirements.txt', 'r') as f:
    requirements = f.readlines()

setup(
    name='stairperm',
    version='0.1.0',
    packages=find_packages(include=['stairperm', 'stairperm.*']),
    install_requires=requirements,
    entry_points={
        'console_scripts': ['stairperm=stairperm.cli:main'],
    },
    long_description=long_description,
    long_description_content_type='text/markdown',
)
