from setuptools import find_packages, setup

setup(
    name="ideallab",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    entry_points={"console_scripts": ["ideallab=app.main:main"]},
)
