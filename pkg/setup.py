import os
import sys
from setuptools import setup, find_packages

sys.path.insert(0, './sounder')


# Utility function to read the README file.
def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


# Utility function to parse directories
def parse_dir(dirpath, extension=None):
    files = []
    for root, dirs, filenames in os.walk(dirpath):
        files += [os.path.join(root, f) for f in sorted(filenames)]
    if extension is None:
        return files
    return [f for f in files if f.endswith(extension)]


# Utility function to create the list of data files
def datafiles():
    files = []
    datadir = os.path.join('share', 'sounder')
    for dirname in ['config']:
        for f in parse_dir(dirname, '.sdc'):
            files.append((os.path.join(datadir, dirname), [f]))
    for dirname in ['data']:
        for f in parse_dir(dirname):
            dirpath = os.path.split(f.split('/', 1)[1])[0]
            files.append((os.path.join(datadir, dirpath), [f]))
    return files


setup(
    name = "sounder",
    version = '0.1.0',
    author = "The sounder authors",
    description = ("Iterative search agents, their graders and a GRPO "
                   "training harness"),
    license = "LGPL",
    packages = find_packages(exclude=['test']),
    long_description=read('README.md'),
    zip_safe = False,
    include_package_data=True,
    data_files = datafiles(),
    install_requires = ['numpy', 'requests', 'matplotlib'],
    entry_points = """
        [console_scripts]
        sounder = sounder.main:main""",
    classifiers=[
        "License :: OSI Approved :: LGPL License",
    ],
)
