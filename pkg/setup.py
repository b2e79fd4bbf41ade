import setuptools


with open("requirements.txt") as fp:
    install_requires = fp.read().splitlines()

setuptools.setup(
    name="treepack",
    version="0.1.0",
    packages=setuptools.find_packages(exclude=("tests", "examples", "examples.*")),
    install_requires=install_requires,
    include_package_data=True,
    entry_points={"console_scripts": ["treepack = treepack.cli:main"]},
)
